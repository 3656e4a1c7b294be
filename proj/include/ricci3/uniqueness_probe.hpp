#pragma once

// Empirical uniqueness check: re-solve Ric(g) = c T in other Milnor frames in
// which T stays diagonal, pull the solutions back to the original frame and
// compare them with the original solutions.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "ricci3/lie_algebra.hpp"
#include "ricci3/linalg.hpp"
#include "ricci3/solver.hpp"

namespace ricci3 {

struct ProbeConfig {
  double tol = 1e-8;          // c spread and metric proportionality
  double diagonal_tol = 1e-10;  // off-diagonal of M^T T M relative to its largest entry
  double equal_tol = 1e-10;   // relative tolerance deciding T_i == T_j
  double milnor_tol = 1e-10;
  SolverConfig solver{};
};

struct ProbeReport {
  std::size_t samples = 0;
  bool c_determined = true;     // false for FamilyAnyC: c is unconstrained
  bool metric_checked = false;  // true when the outcome has discrete solutions
  double c_spread = 0.0;        // max relative deviation of c across frames
  double metric_mismatch = 0.0;  // max relative deviation from proportionality
  bool metric_match = true;
  std::vector<BasisChange> violations;
};

/// True when M^T diag(T) M is diagonal within tol relative to its largest entry.
inline bool keeps_diagonal(const DiagonalTensor& tensor, const Mat3& m, double tol) {
  const Mat3 t2 = congruence(diag3(tensor.t), m);
  return max_abs_off_diagonal(t2) <= tol * max_abs(t2);
}

namespace detail {

using Rng = std::mt19937_64;

inline double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }
inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
inline bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }
inline double sign_flip(Rng& rng) { return coin(rng) ? 1.0 : -1.0; }
inline double quarter_turn(Rng& rng) {
  return std::numbers::pi / 2.0 * std::uniform_int_distribution<int>(0, 3)(rng);
}

/// Random orthogonal matrix (Gram-Schmidt on Gaussian columns).
inline Mat3 random_orthogonal(Rng& rng) {
  std::array<Vec3, 3> cols;
  for (auto& c : cols) c = {normal(rng), normal(rng), normal(rng)};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < j; ++k) {
      double d = 0.0;
      for (int i = 0; i < 3; ++i) d += cols[j][i] * cols[k][i];
      cols[j] = cols[j] - d * cols[k];
    }
    const double n = std::sqrt(cols[j][0] * cols[j][0] + cols[j][1] * cols[j][1] + cols[j][2] * cols[j][2]);
    cols[j] = (1.0 / n) * cols[j];
  }
  Mat3 q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i][j] = cols[j][i];
  return q;
}

/// Block-orthogonal matrix respecting the equal-T_i classes, det +1.
inline Mat3 so3_candidate(const Vec3& t, double equal_tol, Rng& rng) {
  const double scale = std::max(max_abs(t), std::numeric_limits<double>::min());
  auto eq = [&](int i, int j) { return std::abs(t[i] - t[j]) <= equal_tol * scale; };
  Mat3 q{};
  if (eq(0, 1) && eq(1, 2)) {
    q = random_orthogonal(rng);
  } else {
    int pair_i = -1, pair_j = -1;
    for (int i = 0; i < 3 && pair_i < 0; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (eq(i, j)) {
          pair_i = i;
          pair_j = j;
          break;
        }
    for (int i = 0; i < 3; ++i)
      if (i != pair_i && i != pair_j) q[i][i] = sign_flip(rng);
    if (pair_i >= 0) {
      const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      const double refl = sign_flip(rng);
      q[pair_i][pair_i] = std::cos(a);
      q[pair_i][pair_j] = -refl * std::sin(a);
      q[pair_j][pair_i] = std::sin(a);
      q[pair_j][pair_j] = refl * std::cos(a);
    }
  }
  if (det(q) < 0.0) q = -1.0 * q;
  return q;
}

/// b(theta) d(phi) a with a12^2 - a13^2 = 1 and either sign branch.
inline Mat3 sl2_automorphism(double theta, double phi, double s, double a12_sign, double branch) {
  const Mat3 b{{{std::cos(theta), -std::sin(theta), 0.0},
                {std::sin(theta), std::cos(theta), 0.0},
                {0.0, 0.0, 1.0}}};
  const Mat3 d{{{1.0, 0.0, 0.0},
                {0.0, std::cosh(phi), -std::sinh(phi)},
                {0.0, -std::sinh(phi), std::cosh(phi)}}};
  const double a12 = a12_sign * std::cosh(s);
  const double a13 = std::sinh(s);
  const Mat3 a{{{0.0, a12, a13}, {branch, 0.0, 0.0}, {0.0, -branch * a13, -branch * a12}}};
  return b * d * a;
}

inline Mat3 sl2_candidate(Rng& rng) {
  const double theta = coin(rng) ? uniform(rng, 0.0, 2.0 * std::numbers::pi) : quarter_turn(rng);
  const double phi = coin(rng) ? normal(rng) : 0.0;
  const double s = coin(rng) ? normal(rng) : 0.0;
  return sl2_automorphism(theta, phi, s, sign_flip(rng), sign_flip(rng));
}

/// E2 (lambda = (2,2,0)): a31 = a32 = 0, a33 = sigma, a21 = -sigma a12, a11 = sigma a22.
inline Mat3 e2_candidate(Rng& rng) {
  const double sigma = sign_flip(rng);
  const double angle = coin(rng) ? uniform(rng, 0.0, 2.0 * std::numbers::pi) : quarter_turn(rng);
  const double k = coin(rng) ? std::exp(0.5 * normal(rng)) : 1.0;
  const double a22 = k * std::cos(angle);
  const double a12 = -k * std::sin(angle);
  Mat3 m{};
  m[0][0] = sigma * a22;
  m[0][1] = a12;
  m[1][0] = -sigma * a12;
  m[1][1] = a22;
  m[2][2] = sigma;
  if (coin(rng)) {
    m[0][2] = normal(rng);
    m[1][2] = normal(rng);
  }
  return m;
}

/// E11 (lambda = (2,-2,0)): a31 = a32 = 0, a33 = sigma, a21 = sigma a12, a11 = sigma a22.
inline Mat3 e11_candidate(Rng& rng) {
  const double sigma = sign_flip(rng);
  const double k = sign_flip(rng) * (coin(rng) ? std::exp(0.5 * normal(rng)) : 1.0);
  double a22 = 0.0, a12 = 0.0;
  if (coin(rng)) {
    const double beta = normal(rng);
    a22 = k * std::cosh(beta);
    a12 = k * std::sinh(beta);
  } else if (coin(rng)) {
    a22 = k;
  } else {
    a12 = k;
  }
  Mat3 m{};
  m[0][0] = sigma * a22;
  m[0][1] = a12;
  m[1][0] = sigma * a12;
  m[1][1] = a22;
  m[2][2] = sigma;
  if (coin(rng)) {
    m[0][2] = normal(rng);
    m[1][2] = normal(rng);
  }
  return m;
}

/// H3 (lambda = (2,0,0)): a21 = a31 = 0, a11 = a22 a33 - a23 a32.
inline Mat3 h3_candidate(const Vec3& t, Rng& rng) {
  Mat3 m{};
  const int style = std::uniform_int_distribution<int>(0, 3)(rng);
  double a22 = normal(rng), a23 = normal(rng), a32 = normal(rng), a33 = normal(rng);
  if (style == 1) {
    a23 = a32 = 0.0;
  } else if (style == 2) {
    a22 = a33 = 0.0;
  } else if (style == 3 && t[2] != 0.0 && a32 != 0.0) {
    // zero the (2,3) entry of M^T T M
    a33 = -t[1] * a22 * a23 / (t[2] * a32);
  }
  m[1][1] = a22;
  m[1][2] = a23;
  m[2][1] = a32;
  m[2][2] = a33;
  m[0][0] = a22 * a33 - a23 * a32;
  if (coin(rng)) {
    m[0][1] = normal(rng);
    m[0][2] = normal(rng);
  }
  return m;
}

}  // namespace detail

/// Up to n frame changes that preserve the brackets of `group` and keep T
/// diagonal. Each returned change has been checked numerically.
inline std::vector<BasisChange> sample_diagonal_preserving_changes(const UnimodularGroup& group,
                                                                   const DiagonalTensor& tensor,
                                                                   std::size_t n,
                                                                   std::mt19937_64& rng,
                                                                   const ProbeConfig& cfg = {}) {
  std::vector<BasisChange> out;
  const std::size_t max_attempts = 1000 + 400 * n;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < n; ++attempt) {
    Mat3 m{};
    switch (group.name) {
      case Group::SO3: m = detail::so3_candidate(tensor.t, cfg.equal_tol, rng); break;
      case Group::SL2: m = detail::sl2_candidate(rng); break;
      case Group::E2: m = detail::e2_candidate(rng); break;
      case Group::E11: m = detail::e11_candidate(rng); break;
      case Group::H3: m = detail::h3_candidate(tensor.t, rng); break;
      case Group::R3: m = detail::random_orthogonal(rng); break;
    }
    if (!std::isfinite(max_abs(m))) continue;
    try {
      if (!check_milnor_frame(group, m, cfg.milnor_tol)) continue;
    } catch (const InvalidBasis&) {
      continue;
    }
    if (!keeps_diagonal(tensor, m, cfg.diagonal_tol)) continue;
    out.push_back(BasisChange{m, true});
  }
  return out;
}

namespace detail {

/// Relative deviation of the Gram matrix g from the nearest multiple of diag(v).
inline double proportionality_defect(const Mat3& g, const Vec3& v) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += g[i][i] * v[i];
    den += v[i] * v[i];
  }
  const double alpha = num / den;
  if (!(alpha > 0.0)) return HUGE_VAL;
  return max_abs(g - alpha * diag3(v)) / (alpha * max_abs(v));
}

/// Gram matrix in the V-frame of the metric diag(v) given in the X-frame.
inline Mat3 pull_back(const Vec3& v_in_x, const Mat3& m) {
  const Mat3 inv = inverse(m);
  return congruence(diag3(v_in_x), inv);
}

}  // namespace detail

/// Re-solves in n sampled frames and aggregates agreement of c and of the
/// pulled-back metrics. Throws std::invalid_argument when (group, T) has no
/// solution.
inline ProbeReport probe(const UnimodularGroup& group, const DiagonalTensor& tensor, std::size_t n,
                         std::mt19937_64& rng, const ProbeConfig& cfg = {}) {
  const SolveOutcome base = solve(group, tensor, cfg.solver);
  if (base.kind == OutcomeKind::NoSolution)
    throw std::invalid_argument("probe requires a solvable (group, T)");

  ProbeReport report;
  report.c_determined = base.kind != OutcomeKind::FamilyAnyC;
  report.metric_checked =
      base.kind == OutcomeKind::Unique || base.kind == OutcomeKind::TwoSolutions;

  const auto changes = sample_diagonal_preserving_changes(group, tensor, n, rng, cfg);
  report.samples = changes.size();

  for (const auto& change : changes) {
    const DiagonalTensor moved(diagonal_of(congruence(diag3(tensor.t), change.m)));
    const SolveOutcome other = solve(group, moved, cfg.solver);
    bool bad = other.kind != base.kind;

    if (!bad && report.metric_checked) {
      for (const auto& b : base.solutions) {
        const Solution* nearest = nullptr;
        for (const auto& o : other.solutions)
          if (!nearest || std::abs(o.c - b.c) < std::abs(nearest->c - b.c)) nearest = &o;
        const double dc = std::abs(nearest->c - b.c) / b.c;
        const double dm = detail::proportionality_defect(
            detail::pull_back(nearest->metric.components(), change.m), b.metric.components());
        report.c_spread = std::max(report.c_spread, dc);
        report.metric_mismatch = std::max(report.metric_mismatch, dm);
        if (dc > cfg.tol || dm > cfg.tol) bad = true;
      }
    } else if (!bad && base.family) {
      const Family& fb = *base.family;
      const Family& fo = *other.family;
      if (fb.c_fixed) {
        const double dc = std::abs(*fo.c_fixed - *fb.c_fixed) / *fb.c_fixed;
        report.c_spread = std::max(report.c_spread, dc);
        if (dc > cfg.tol) bad = true;
      }
      // family members need not be proportional; recorded but not a violation
      report.metric_mismatch = std::max(
          report.metric_mismatch,
          detail::proportionality_defect(detail::pull_back(fo.sample.components(), change.m),
                                         fb.sample.components()));
    }
    if (bad) report.violations.push_back(change);
  }
  report.metric_match = report.metric_mismatch <= cfg.tol;
  return report;
}

}  // namespace ricci3
