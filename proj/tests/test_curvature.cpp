#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ricci3/curvature.hpp"
#include "support/oracles.hpp"

using namespace ricci3;

TEST(Curvature, MetricValidation) {
  EXPECT_THROW(DiagonalMetric(1, 0, 1), InvalidMetric);
  EXPECT_THROW(DiagonalMetric(1, -1, 1), InvalidMetric);
  EXPECT_THROW(DiagonalMetric(1, NAN, 1), InvalidMetric);
  EXPECT_THROW(DiagonalMetric(1, INFINITY, 1), InvalidMetric);
  EXPECT_NO_THROW(DiagonalMetric(1e-300, 1, 1e300));
}

TEST(Curvature, RoundSphere) {
  // The bi-invariant metric on SO(3) with this normalization is Einstein,
  // Ric = 2 * (identity) for v = (1,1,1).
  const Vec3 ric = ricci_diagonal(UnimodularGroup(Group::SO3), DiagonalMetric(1, 1, 1));
  EXPECT_DOUBLE_EQ(ric[0], 2.0);
  EXPECT_DOUBLE_EQ(ric[1], 2.0);
  EXPECT_DOUBLE_EQ(ric[2], 2.0);
}

TEST(Curvature, FlatMetricsOnE2AndR3) {
  const Vec3 e2 = ricci_diagonal(UnimodularGroup(Group::E2), DiagonalMetric(3, 3, 0.2));
  EXPECT_EQ(max_abs(e2), 0.0);
  const Vec3 r3 = ricci_diagonal(UnimodularGroup(Group::R3), DiagonalMetric(1, 5, 9));
  EXPECT_EQ(max_abs(r3), 0.0);
}

TEST(Curvature, HeisenbergSignature) {
  const Vec3 ric = ricci_diagonal(UnimodularGroup(Group::H3), DiagonalMetric(1, 1, 1));
  EXPECT_DOUBLE_EQ(ric[0], 2.0);
  EXPECT_DOUBLE_EQ(ric[1], -2.0);
  EXPECT_DOUBLE_EQ(ric[2], -2.0);
}

TEST(Curvature, XCoefficients) {
  const auto x = x_coefficients(UnimodularGroup(Group::SL2), DiagonalMetric(1, 2, 3));
  // x1 = (2*2 - 2*3 - 2*1)/2, x2 = (2*1 - 2*3 - 2*2)/2, x3 = (2*1 + 2*2 + 2*3)/2
  EXPECT_DOUBLE_EQ(x[0], -2.0);
  EXPECT_DOUBLE_EQ(x[1], -4.0);
  EXPECT_DOUBLE_EQ(x[2], 6.0);
}

TEST(Curvature, ScaleInvariance) {
  std::mt19937_64 rng(11);
  for (Group g : kAllGroups) {
    const UnimodularGroup group(g);
    for (int trial = 0; trial < 50; ++trial) {
      const DiagonalMetric m(oracle::log_uniform(rng, 0.01, 100), oracle::log_uniform(rng, 0.01, 100),
                             oracle::log_uniform(rng, 0.01, 100));
      const Vec3 a = ricci_diagonal(group, m);
      const Vec3 b = ricci_diagonal(group, m.scaled(7.5));
      for (int i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-12 * (1 + max_abs(a)));
    }
  }
}

TEST(Curvature, KoszulMatchesClosedForm) {
  std::mt19937_64 rng(5);
  for (Group g : kAllGroups) {
    const UnimodularGroup group(g);
    for (int trial = 0; trial < 300; ++trial) {
      const DiagonalMetric m(oracle::log_uniform(rng, 1e-3, 1e3), oracle::log_uniform(rng, 1e-3, 1e3),
                             oracle::log_uniform(rng, 1e-3, 1e3));
      const Vec3 closed = ricci_diagonal(group, m);
      const Mat3 full = ricci_koszul(group, m);
      const double scale = std::max(max_abs(closed), 1e-300);
      EXPECT_LE(max_abs(diagonal_of(full) - closed) / scale, 1e-9);
      EXPECT_LE(max_abs_off_diagonal(full) / scale, 1e-10);
    }
  }
}

TEST(Curvature, KoszulIsSymmetricForGeneralMetric) {
  const Mat3 g{{{2.0, 0.3, -0.1}, {0.3, 1.5, 0.2}, {-0.1, 0.2, 0.8}}};
  for (Group group : kAllGroups) {
    const Mat3 ric = ricci_koszul(structure_constants(UnimodularGroup(group)), g);
    EXPECT_TRUE(is_symmetric(ric, 1e-12));
  }
}

TEST(Curvature, KoszulIsFrameCovariant) {
  // Ric computed in a rotated so(3) frame equals the congruence of Ric.
  const double a = 0.3, b = -1.1;
  const Mat3 rz{{{std::cos(a), -std::sin(a), 0}, {std::sin(a), std::cos(a), 0}, {0, 0, 1}}};
  const Mat3 rx{{{1, 0, 0}, {0, std::cos(b), -std::sin(b)}, {0, std::sin(b), std::cos(b)}}};
  const Mat3 r = rz * rx;
  const Mat3 g = diag3({1.0, 2.0, 4.0});
  const auto sc = structure_constants(UnimodularGroup(Group::SO3));
  const Mat3 lhs = ricci_koszul(sc, congruence(g, r));
  const Mat3 rhs = congruence(ricci_koszul(sc, g), r);
  EXPECT_LE(max_abs(lhs - rhs), 1e-12);
}

TEST(Curvature, KoszulRejectsIndefiniteMetric) {
  const auto sc = structure_constants(UnimodularGroup(Group::SO3));
  EXPECT_THROW(ricci_koszul(sc, diag3({1, -1, 1})), InvalidMetric);
  const Mat3 asym{{{1, 0.5, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_THROW(ricci_koszul(sc, asym), InvalidMetric);
}
