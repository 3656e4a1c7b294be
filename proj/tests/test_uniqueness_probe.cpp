#include <gtest/gtest.h>

#include <random>

#include "ricci3/uniqueness_probe.hpp"

using namespace ricci3;

namespace {

ProbeReport run_probe(Group g, Vec3 t, std::size_t n = 16, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  return probe(UnimodularGroup(g), DiagonalTensor(t), n, rng);
}

}  // namespace

TEST(Probe, DistinctEigenvaluesOnlySignFlips) {
  std::mt19937_64 rng(1);
  const auto changes =
      sample_diagonal_preserving_changes(UnimodularGroup(Group::SO3), DiagonalTensor({3, 2, 1}), 4, rng);
  ASSERT_EQ(changes.size(), 4u);
  for (const auto& c : changes) {
    EXPECT_NEAR(det(c.m), 1.0, 1e-12);
    EXPECT_LE(max_abs_off_diagonal(c.m), 1e-12);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(c.m[i][i]), 1.0, 1e-12);
  }
}

TEST(Probe, IsotropicAcceptsRotations) {
  std::mt19937_64 rng(2);
  const auto changes =
      sample_diagonal_preserving_changes(UnimodularGroup(Group::SO3), DiagonalTensor({1, 1, 1}), 4, rng);
  ASSERT_EQ(changes.size(), 4u);
  for (const auto& c : changes) EXPECT_TRUE(check_milnor_frame(UnimodularGroup(Group::SO3), c));
}

TEST(Probe, Sl2EqualPair) {
  std::mt19937_64 rng(3);
  const auto changes =
      sample_diagonal_preserving_changes(UnimodularGroup(Group::SL2), DiagonalTensor({-1, -1, 1}), 2, rng);
  ASSERT_EQ(changes.size(), 2u);
  for (const auto& c : changes) {
    EXPECT_TRUE(check_milnor_frame(UnimodularGroup(Group::SL2), c));
    EXPECT_TRUE(keeps_diagonal(DiagonalTensor({-1, -1, 1}), c.m, 1e-10));
  }
}

TEST(Probe, UniqueRows) {
  struct Row {
    Group g;
    Vec3 t;
  };
  const Row rows[] = {
      {Group::SO3, {3, 2, 1}},   {Group::SO3, {2, 2, 1}},    {Group::SO3, {1, 1, 1}},
      {Group::SL2, {2, -1, -1}}, {Group::SL2, {-1, 2, -1}},  {Group::SL2, {-1, -2, 3}},
      {Group::SL2, {-3, -2, 1}}, {Group::SL2, {-2, -2, 1}},  {Group::E2, {3, -1, -2}},
      {Group::E2, {-1, 3, -2}},  {Group::E11, {3, -1, -2}},  {Group::E11, {-1, 3, -2}},
      {Group::H3, {1, -1, -1}},  {Group::H3, {2, -0.5, -3}},
  };
  for (const auto& row : rows) {
    const auto rep = run_probe(row.g, row.t);
    EXPECT_EQ(rep.samples, 16u) << group_id(row.g);
    EXPECT_TRUE(rep.metric_checked);
    EXPECT_LE(rep.c_spread, 1e-9) << group_id(row.g);
    EXPECT_LE(rep.metric_mismatch, 1e-8) << group_id(row.g);
    EXPECT_TRUE(rep.violations.empty());
  }
}

TEST(Probe, TwoSolutionBranchesStable) {
  const auto rep = run_probe(Group::SO3, {10, -1, -1});
  EXPECT_EQ(rep.samples, 16u);
  EXPECT_LE(rep.c_spread, 1e-9);
  EXPECT_TRUE(rep.metric_match);
}

TEST(Probe, FamilyAnyCIsFlagged) {
  const auto rep = run_probe(Group::E2, {0, 0, 0});
  EXPECT_FALSE(rep.c_determined);
  EXPECT_FALSE(rep.metric_checked);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Probe, FixedCFamilies) {
  for (const auto& [g, t] : {std::pair{Group::SO3, Vec3{4, 0, 0}}, std::pair{Group::SL2, Vec3{-1, -1, 1}},
                             std::pair{Group::E11, Vec3{0, 0, -2}}}) {
    const auto rep = run_probe(g, t);
    EXPECT_TRUE(rep.c_determined);
    EXPECT_LE(rep.c_spread, 1e-9);
  }
}

TEST(Probe, NoSolutionThrows) {
  EXPECT_THROW(run_probe(Group::R3, {0, 0, 1}), std::invalid_argument);
}

TEST(Probe, DeterministicForSeed) {
  const auto a = run_probe(Group::SL2, {-3, -2, 1}, 8, 77);
  const auto b = run_probe(Group::SL2, {-3, -2, 1}, 8, 77);
  EXPECT_EQ(a.c_spread, b.c_spread);
  EXPECT_EQ(a.metric_mismatch, b.metric_mismatch);
}
