#pragma once

// Solves Ric(g) = c T for a left-invariant metric g and a constant c > 0 on
// the six three-dimensional unimodular Lie groups, given T diagonal in a
// Milnor frame. Metrics are reported diagonal in the same frame.
//
// With the normalization v1 v2 v3 c = 1 the system Ric(V_i,V_i) = c T_i
// becomes 2 v_i x_j x_k = T_i. On SO3 and SL2 its solutions correspond to
// roots p = x1 x2 x3 of a cubic inside case-specific intervals; on the
// remaining groups lambda_3 = 0 and the system is solved in closed form.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ricci3/cubic.hpp"
#include "ricci3/curvature.hpp"
#include "ricci3/lie_algebra.hpp"

namespace ricci3 {

/// Components T(V_i, V_i) of the prescribed tensor in a Milnor frame.
struct DiagonalTensor {
  Vec3 t{};

  DiagonalTensor() = default;
  explicit DiagonalTensor(const Vec3& values) : t(values) {
    for (double x : t)
      if (!std::isfinite(x)) throw std::invalid_argument("tensor components must be finite");
  }

  double operator[](int i) const { return t[i]; }
  double norm_inf() const { return max_abs(t); }
  bool is_zero() const { return t[0] == 0.0 && t[1] == 0.0 && t[2] == 0.0; }
  DiagonalTensor scaled(double s) const { return DiagonalTensor(s * t); }
};

enum class OutcomeKind { NoSolution, Unique, TwoSolutions, FamilyFixedC, FamilyAnyC };

constexpr std::string_view outcome_kind_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::NoSolution: return "NoSolution";
    case OutcomeKind::Unique: return "Unique";
    case OutcomeKind::TwoSolutions: return "TwoSolutions";
    case OutcomeKind::FamilyFixedC: return "FamilyFixedC";
    case OutcomeKind::FamilyAnyC: return "FamilyAnyC";
  }
  return "?";
}

/// Rows of the existence table, one per (group, signature, condition).
enum class CaseLabel {
  None,
  SO3PositiveDefinite,
  SO3PlusZeroZero,
  SO3PlusMinusMinusTwo,
  SO3PlusMinusMinusUnique,
  SL2CaseI,
  SL2CaseII,
  SL2CaseIII,
  SL2CaseIV,
  SL2CaseV,
  SL2CaseVI,
  SL2CaseVII,
  E2Zero,
  E2Mixed,
  E11Flat,
  E11Mixed,
  H3Mixed,
  R3Zero,
};

constexpr std::string_view case_label_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::None: return "none";
    case CaseLabel::SO3PositiveDefinite: return "SO3 (+,+,+)";
    case CaseLabel::SO3PlusZeroZero: return "SO3 (+,0,0)";
    case CaseLabel::SO3PlusMinusMinusTwo: return "SO3 (+,-,-) two-solution subcase";
    case CaseLabel::SO3PlusMinusMinusUnique: return "SO3 (+,-,-) unique subcase";
    case CaseLabel::SL2CaseI: return "SL2 case (i)";
    case CaseLabel::SL2CaseII: return "SL2 case (ii)";
    case CaseLabel::SL2CaseIII: return "SL2 case (iii)";
    case CaseLabel::SL2CaseIV: return "SL2 case (iv)";
    case CaseLabel::SL2CaseV: return "SL2 case (v)";
    case CaseLabel::SL2CaseVI: return "SL2 case (vi)";
    case CaseLabel::SL2CaseVII: return "SL2 case (vii)";
    case CaseLabel::E2Zero: return "E2 case (i)";
    case CaseLabel::E2Mixed: return "E2 case (ii)";
    case CaseLabel::E11Flat: return "E11 case (i)";
    case CaseLabel::E11Mixed: return "E11 case (ii)";
    case CaseLabel::H3Mixed: return "H3 (+,-,-)";
    case CaseLabel::R3Zero: return "R3 (0,0,0)";
  }
  return "?";
}

/// The two uniqueness columns of the existence table for a row: whether every
/// solution shares one c, and whether any two solutions with the same c have
/// proportional metrics.
struct TableColumns {
  bool c_same;
  bool metric_unique;
};

constexpr std::optional<TableColumns> table_columns(CaseLabel c) {
  switch (c) {
    case CaseLabel::None: return std::nullopt;
    case CaseLabel::SO3PositiveDefinite: return TableColumns{true, true};
    case CaseLabel::SO3PlusZeroZero: return TableColumns{true, false};
    case CaseLabel::SO3PlusMinusMinusTwo:
    case CaseLabel::SO3PlusMinusMinusUnique: return TableColumns{false, true};
    case CaseLabel::SL2CaseI:
    case CaseLabel::SL2CaseII:
    case CaseLabel::SL2CaseIII:
    case CaseLabel::SL2CaseIV: return TableColumns{true, true};
    case CaseLabel::SL2CaseV:
    case CaseLabel::SL2CaseVI:
    case CaseLabel::SL2CaseVII: return TableColumns{true, false};
    case CaseLabel::E2Zero: return TableColumns{false, false};
    case CaseLabel::E2Mixed: return TableColumns{true, true};
    case CaseLabel::E11Flat: return TableColumns{true, false};
    case CaseLabel::E11Mixed: return TableColumns{true, true};
    case CaseLabel::H3Mixed: return TableColumns{true, true};
    case CaseLabel::R3Zero: return TableColumns{false, false};
  }
  return std::nullopt;
}

/// Linear constraint describing a family of solution metrics.
enum class FamilyConstraint { V1EqV2PlusV3, V2EqV1PlusV3, V3EqV1PlusV2, V1EqV2, Any };

constexpr std::string_view family_constraint_name(FamilyConstraint f) {
  switch (f) {
    case FamilyConstraint::V1EqV2PlusV3: return "v1=v2+v3";
    case FamilyConstraint::V2EqV1PlusV3: return "v2=v1+v3";
    case FamilyConstraint::V3EqV1PlusV2: return "v3=v1+v2";
    case FamilyConstraint::V1EqV2: return "v1=v2";
    case FamilyConstraint::Any: return "any";
  }
  return "?";
}

/// The correspondence variable p and q with q^3 = p (p+T1)(p+T2)(p+-T3).
struct CubicSolveTrace {
  double p = 0.0;
  double q = 0.0;
  int multiplicity = 1;
};

struct Solution {
  DiagonalMetric metric;
  double c = 0.0;
  std::optional<CubicSolveTrace> trace;
};

struct Family {
  FamilyConstraint constraint = FamilyConstraint::Any;
  std::optional<double> c_fixed;  // empty: every c > 0 works
  DiagonalMetric sample;
  double sample_c = 1.0;
};

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::NoSolution;
  std::vector<Solution> solutions;  // 1 for Unique, 2 for TwoSolutions
  std::optional<Family> family;
  CaseLabel case_label = CaseLabel::None;
  // SO3 only: position k of the internally sorted tensor came from input index
  // frame_permutation[k]. Reported metrics are already in the input order.
  std::array<int, 3> frame_permutation{0, 1, 2};
  std::vector<std::string> notes;

  /// Every c value carried by the outcome (solutions, or the fixed family c).
  std::vector<double> c_values() const {
    std::vector<double> cs;
    for (const auto& s : solutions) cs.push_back(s.c);
    if (family && family->c_fixed) cs.push_back(*family->c_fixed);
    return cs;
  }
};

struct SolverConfig {
  double zero_tol = 1e-11;  // relative to max |T_i|
  double root_tol = 1e-12;
};

namespace detail {

inline int tolerant_sign(double x, double scale, const SolverConfig& cfg) {
  if (std::abs(x) <= cfg.zero_tol * scale) return 0;
  return x > 0.0 ? 1 : -1;
}

inline std::array<int, 3> descending_order(const Vec3& t) {
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return t[a] > t[b]; });
  return idx;
}

inline CaseLabel classify_so3_sorted(const Vec3& t, const SolverConfig& cfg) {
  const double scale = max_abs(t);
  const int s1 = tolerant_sign(t[0], scale, cfg);
  const int s2 = tolerant_sign(t[1], scale, cfg);
  const int s3 = tolerant_sign(t[2], scale, cfg);
  if (s1 > 0 && s2 > 0 && s3 > 0) return CaseLabel::SO3PositiveDefinite;
  if (s1 > 0 && s2 == 0 && s3 == 0) return CaseLabel::SO3PlusZeroZero;
  if (s1 > 0 && s2 < 0 && s3 < 0) {
    const double sum = t[0] + t[1] + t[2];
    const double prod = t[0] * t[1] * t[2];
    const double f_crit = sum * sum * sum / 27.0 - prod;  // fbar(-sum/3)
    const double f_left = -t[0] * (t[0] - t[1]) * (t[0] - t[2]);  // fbar(-T1)
    const double cube = scale * scale * scale;
    const bool crit_negative = tolerant_sign(sum, scale, cfg) > 0;  // -sum/3 < 0
    const int sign_crit = tolerant_sign(f_crit, cube, cfg);
    const int sign_left = tolerant_sign(f_left, cube, cfg);
    const bool cond_i = crit_negative && sign_crit >= 0;
    const bool cond_ii = sign_left > 0;
    if (!cond_i && !cond_ii) return CaseLabel::None;
    if (sign_left < 0 && crit_negative && sign_crit > 0) return CaseLabel::SO3PlusMinusMinusTwo;
    return CaseLabel::SO3PlusMinusMinusUnique;
  }
  return CaseLabel::None;
}

inline CaseLabel classify_sl2(const Vec3& t, const SolverConfig& cfg) {
  const double scale = max_abs(t);
  const int s1 = tolerant_sign(t[0], scale, cfg);
  const int s2 = tolerant_sign(t[1], scale, cfg);
  const int s3 = tolerant_sign(t[2], scale, cfg);
  if (s1 > 0 && s2 < 0 && s3 < 0)
    return tolerant_sign(t[2] + t[0], scale, cfg) > 0 ? CaseLabel::SL2CaseI : CaseLabel::None;
  if (s2 > 0 && s1 < 0 && s3 < 0)
    return tolerant_sign(t[2] + t[1], scale, cfg) > 0 ? CaseLabel::SL2CaseII : CaseLabel::None;
  if (s1 < 0 && s2 < 0 && s3 > 0) {
    const int e1 = tolerant_sign(t[2] + t[0], scale, cfg);
    const int e2 = tolerant_sign(t[2] + t[1], scale, cfg);
    if (e1 == 0 && e2 == 0) return CaseLabel::SL2CaseV;
    if (e1 > 0 && e2 > 0) return CaseLabel::SL2CaseIII;
    if (e1 < 0 && e2 < 0) return CaseLabel::SL2CaseIV;
    return CaseLabel::None;
  }
  if (s1 < 0 && s2 == 0 && s3 == 0) return CaseLabel::SL2CaseVI;
  if (s2 < 0 && s1 == 0 && s3 == 0) return CaseLabel::SL2CaseVII;
  return CaseLabel::None;
}

/// Shared condition of the E2 and E11 non-flat rows: T3 < 0, T1 + T2 > 0, T1 T2 < 0.
inline bool mixed_flat_plane_condition(const Vec3& t, const SolverConfig& cfg) {
  const double scale = max_abs(t);
  const int s1 = tolerant_sign(t[0], scale, cfg);
  const int s2 = tolerant_sign(t[1], scale, cfg);
  const int s3 = tolerant_sign(t[2], scale, cfg);
  return s3 < 0 && s1 * s2 < 0 && tolerant_sign(t[0] + t[1], scale, cfg) > 0;
}

inline bool all_zero(const Vec3& t) { return t[0] == 0.0 && t[1] == 0.0 && t[2] == 0.0; }

}  // namespace detail

/// The existence-table row matched by T, or CaseLabel::None. SO3 input is
/// sorted descending first.
inline CaseLabel classify_signature(const UnimodularGroup& group, const DiagonalTensor& tensor,
                                   const SolverConfig& cfg = {}) {
  const Vec3& t = tensor.t;
  const double scale = max_abs(t);
  auto sign = [&](double x) { return detail::tolerant_sign(x, scale, cfg); };
  switch (group.name) {
    case Group::SO3: {
      const auto order = detail::descending_order(t);
      return detail::classify_so3_sorted({t[order[0]], t[order[1]], t[order[2]]}, cfg);
    }
    case Group::SL2: return detail::classify_sl2(t, cfg);
    case Group::E2:
      if (detail::all_zero(t)) return CaseLabel::E2Zero;
      return detail::mixed_flat_plane_condition(t, cfg) ? CaseLabel::E2Mixed : CaseLabel::None;
    case Group::E11:
      if (!detail::all_zero(t) && sign(t[0]) == 0 && sign(t[1]) == 0 && sign(t[2]) < 0)
        return CaseLabel::E11Flat;
      return detail::mixed_flat_plane_condition(t, cfg) ? CaseLabel::E11Mixed : CaseLabel::None;
    case Group::H3:
      return (sign(t[0]) > 0 && sign(t[1]) < 0 && sign(t[2]) < 0) ? CaseLabel::H3Mixed
                                                                  : CaseLabel::None;
    case Group::R3: return detail::all_zero(t) ? CaseLabel::R3Zero : CaseLabel::None;
  }
  return CaseLabel::None;
}

/// The cubic whose roots parametrize solutions on SO3 and SL2:
///   SO3: 2p^3 + (T1+T2+T3) p^2 - T1 T2 T3
///   SL2: 2p^3 + (T1+T2-T3) p^2 + T1 T2 T3
inline CubicPoly correspondence_cubic(const UnimodularGroup& group, const DiagonalTensor& tensor) {
  const Vec3& t = tensor.t;
  if (group.name == Group::SO3) return {2.0, t[0] + t[1] + t[2], 0.0, -t[0] * t[1] * t[2]};
  if (group.name == Group::SL2) return {2.0, t[0] + t[1] - t[2], 0.0, t[0] * t[1] * t[2]};
  throw std::invalid_argument("correspondence cubic exists only for SO3 and SL2");
}

namespace detail {

/// Shifted components w with p + w_i the denominators of the x_i: w = T on SO3
/// and (T1, T2, -T3) on SL2. Both cubics read 2p^3 + (w1+w2+w3) p^2 - w1 w2 w3.
inline Vec3 shifts(const UnimodularGroup& group, const Vec3& t) {
  return {t[0], t[1], group.name == Group::SO3 ? t[2] : -t[2]};
}

inline Solution reconstruct_from_shifted(const UnimodularGroup& group, double p, const Vec3& shifted) {
  const double q = std::cbrt(p * shifted[0] * shifted[1] * shifted[2]);
  const Vec3& l = group.lambda;
  // v_i = (x_j + x_k) / l_i with x_j = q / shifted_j, summed over a common denominator
  Vec3 v{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    v[i] = q * (shifted[j] + shifted[k]) / (shifted[j] * shifted[k] * l[i]);
  }
  if (!(v[0] > 0.0 && v[1] > 0.0 && v[2] > 0.0) || !std::isfinite(v[0] * v[1] * v[2]))
    throw std::domain_error("inadmissible root: reconstructed metric is not positive");
  return Solution{DiagonalMetric(v), 1.0 / (v[0] * v[1] * v[2]), CubicSolveTrace{p, q, 1}};
}

/// Re-solves for u = p + w_i near a simple root p, where i is the shift that
/// nearly cancels p. The shifted cubic has factored low-order coefficients, so
/// u keeps full relative precision even when p + w_i alone would not.
inline std::pair<double, Vec3> refine_simple_root(const Vec3& w, double p) {
  Vec3 shifted{p + w[0], p + w[1], p + w[2]};
  int i = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(shifted[k]) < std::abs(shifted[i])) i = k;
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  const double dj = w[i] - w[j], dk = w[i] - w[k];
  // f(u - w_i) = 2u^3 + (w_j + w_k - 5 w_i) u^2 + 2 w_i (dj + dk) u - w_i dj dk
  const CubicPoly g{2.0, w[j] + w[k] - 5.0 * w[i], 2.0 * w[i] * (dj + dk), -w[i] * dj * dk};
  const double u0 = shifted[i];
  double step = std::max(std::abs(u0), std::numeric_limits<double>::min()) * 1e-8;
  for (int tries = 0; tries < 60; ++tries, step *= 4.0) {
    const double lo = u0 - step, hi = u0 + step;
    const double glo = g(lo), ghi = g(hi);
    if (glo == 0.0 || ghi == 0.0 || (glo < 0.0) == (ghi < 0.0)) continue;
    const double u = detail::polish_bracketed(g, lo, hi, glo);
    shifted[i] = u;
    shifted[j] = u - dj;
    shifted[k] = u - dk;
    return {u - w[i], shifted};
  }
  return {p, shifted};
}

}  // namespace detail

/// Recovers (metric, c) from an admissible root p of the correspondence cubic:
/// x_i = q / (p + w_i) with w = (T1, T2, T3) on SO3 and (T1, T2, -T3) on SL2,
/// q^3 = p (p + w1)(p + w2)(p + w3), v_i = (x_j + x_k) / lambda_i and
/// c = 1 / (v1 v2 v3).
inline Solution reconstruct_from_p(const UnimodularGroup& group, const DiagonalTensor& tensor,
                                   double p) {
  if (group.name != Group::SO3 && group.name != Group::SL2)
    throw std::invalid_argument("reconstruct_from_p applies to SO3 and SL2 only");
  const Vec3 w = detail::shifts(group, tensor.t);
  return detail::reconstruct_from_shifted(group, p, {p + w[0], p + w[1], p + w[2]});
}

namespace detail {

/// Scales v so that v1 v2 v3 c = 1.
inline DiagonalMetric normalized(const DiagonalMetric& m, double c) {
  return m.scaled(std::cbrt(1.0 / (m.volume_factor() * c)));
}

inline double residual_of(const UnimodularGroup& group, const DiagonalMetric& m, double c,
                          const Vec3& t) {
  const Vec3 ric = ricci_diagonal(group, m);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(ric[i] - c * t[i]));
  return worst / (1.0 + std::abs(c) * max_abs(t));
}

/// Family whose members satisfy `constraint`; c is read off the Ricci tensor
/// of a sample member at the index where T is non-zero.
inline Family fixed_c_family(const UnimodularGroup& group, const Vec3& t,
                             FamilyConstraint constraint, const Vec3& sample, int active) {
  const DiagonalMetric raw(sample);
  const double c = ricci_diagonal(group, raw)[active] / t[active];
  return Family{constraint, c, normalized(raw, c), c};
}

inline Family any_c_family(FamilyConstraint constraint) {
  return Family{constraint, std::nullopt, DiagonalMetric(1.0, 1.0, 1.0), 1.0};
}

inline std::vector<Solution> solutions_from_roots(const UnimodularGroup& group,
                                                  const DiagonalTensor& tensor, double lo,
                                                  double hi, const SolverConfig& cfg,
                                                  std::vector<std::string>& notes) {
  const RootReport roots = roots_in_interval(correspondence_cubic(group, tensor), lo, hi, cfg.root_tol);
  std::vector<Solution> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    try {
      Solution s;
      if (roots.multiplicities[i] == 1) {
        const auto [p, shifted] = refine_simple_root(shifts(group, tensor.t), roots.roots[i]);
        s = reconstruct_from_shifted(group, p, shifted);
      } else {
        s = reconstruct_from_p(group, tensor, roots.roots[i]);
      }
      s.trace->multiplicity = roots.multiplicities[i];
      out.push_back(std::move(s));
    } catch (const std::domain_error&) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "root p=%.17g discarded: metric not positive", roots.roots[i]);
      notes.emplace_back(buf);
    }
  }
  return out;
}

inline void finish_discrete(SolveOutcome& out) {
  switch (out.solutions.size()) {
    case 0: out.kind = OutcomeKind::NoSolution; break;
    case 1: out.kind = OutcomeKind::Unique; break;
    default: out.kind = OutcomeKind::TwoSolutions; break;
  }
}

inline Solution closed_form_solution(const DiagonalMetric& raw, double c) {
  return Solution{normalized(raw, c), c, std::nullopt};
}

inline SolveOutcome solve_so3(const UnimodularGroup& group, const Vec3& t, const SolverConfig& cfg) {
  SolveOutcome out;
  const auto order = descending_order(t);
  const DiagonalTensor sorted({t[order[0]], t[order[1]], t[order[2]]});
  out.frame_permutation = order;
  out.case_label = classify_so3_sorted(sorted.t, cfg);

  auto unsort = [&](const Vec3& v) {
    Vec3 r{};
    for (int k = 0; k < 3; ++k) r[order[k]] = v[k];
    return r;
  };

  std::vector<Solution> sols;
  switch (out.case_label) {
    case CaseLabel::SO3PositiveDefinite:
      sols = solutions_from_roots(group, sorted, 0.0, HUGE_VAL, cfg, out.notes);
      break;
    case CaseLabel::SO3PlusZeroZero: {
      Family f = fixed_c_family(group, sorted.t, FamilyConstraint::V1EqV2PlusV3, {2.0, 1.0, 1.0}, 0);
      static constexpr FamilyConstraint sum_at[3] = {FamilyConstraint::V1EqV2PlusV3,
                                                     FamilyConstraint::V2EqV1PlusV3,
                                                     FamilyConstraint::V3EqV1PlusV2};
      f.constraint = sum_at[order[0]];
      f.sample = DiagonalMetric(unsort(f.sample.components()));
      out.family = f;
      out.kind = OutcomeKind::FamilyFixedC;
      return out;
    }
    case CaseLabel::SO3PlusMinusMinusTwo:
      sols = solutions_from_roots(group, sorted, -sorted[0], 0.0, cfg, out.notes);
      break;
    case CaseLabel::SO3PlusMinusMinusUnique: {
      const double sum = sorted[0] + sorted[1] + sorted[2];
      const double crit = -sum / 3.0;
      if (crit < 0.0 && crit > -sorted[0]) {
        // boundary of the two-solution region: double root at the critical point
        try {
          Solution s = reconstruct_from_p(group, sorted, crit);
          s.trace->multiplicity = 2;
          sols.push_back(std::move(s));
        } catch (const std::domain_error&) {
        }
      }
      if (sols.empty()) sols = solutions_from_roots(group, sorted, -sorted[0], 0.0, cfg, out.notes);
      break;
    }
    default: break;
  }
  for (auto& s : sols) s.metric = DiagonalMetric(unsort(s.metric.components()));
  out.solutions = std::move(sols);
  finish_discrete(out);
  if (out.kind == OutcomeKind::Unique && out.case_label == CaseLabel::SO3PlusMinusMinusTwo)
    out.case_label = CaseLabel::SO3PlusMinusMinusUnique;
  if (out.kind == OutcomeKind::TwoSolutions && out.case_label == CaseLabel::SO3PlusMinusMinusUnique)
    out.case_label = CaseLabel::SO3PlusMinusMinusTwo;
  if (out.kind == OutcomeKind::NoSolution && out.case_label != CaseLabel::None)
    out.notes.emplace_back("no admissible root found for a solvable signature");
  return out;
}

inline void note_sl2_axis_family(const UnimodularGroup& group, const Vec3& t, const Family& f,
                                 int active, std::vector<std::string>& notes) {
  // The alternative constant -T_i/8 does not solve the system for the
  // constructed member; record its residual next to the accepted one.
  const double alt = -t[active] / 8.0;
  const double r_alt = residual_of(group, f.sample, alt, t);
  const double r_ok = residual_of(group, f.sample, *f.c_fixed, t);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "family constant c=-8/T%d=%.17g (residual %.3g); alternative c=-T%d/8=%.17g "
                "rejected (residual %.3g)",
                active + 1, *f.c_fixed, r_ok, active + 1, alt, r_alt);
  notes.emplace_back(buf);
}

inline SolveOutcome solve_sl2(const UnimodularGroup& group, const Vec3& t, const SolverConfig& cfg) {
  SolveOutcome out;
  out.case_label = classify_sl2(t, cfg);
  const DiagonalTensor tensor(t);
  switch (out.case_label) {
    case CaseLabel::SL2CaseI:
      out.solutions = solutions_from_roots(group, tensor, -t[0], t[2], cfg, out.notes);
      break;
    case CaseLabel::SL2CaseII: {
      // swap V1 <-> V2 (and V3 -> -V3), solve as case (i), swap back
      const DiagonalTensor swapped({t[1], t[0], t[2]});
      out.solutions = solutions_from_roots(group, swapped, -t[1], t[2], cfg, out.notes);
      for (auto& s : out.solutions) {
        const Vec3& v = s.metric.components();
        s.metric = DiagonalMetric(v[1], v[0], v[2]);
      }
      break;
    }
    case CaseLabel::SL2CaseIII:
      out.solutions = solutions_from_roots(group, tensor, std::max(-t[0], -t[1]), t[2], cfg, out.notes);
      break;
    case CaseLabel::SL2CaseIV:
      out.solutions = solutions_from_roots(group, tensor, t[2], std::min(-t[0], -t[1]), cfg, out.notes);
      break;
    case CaseLabel::SL2CaseV:
      out.family = fixed_c_family(group, t, FamilyConstraint::V3EqV1PlusV2, {1.0, 1.0, 2.0}, 2);
      out.kind = OutcomeKind::FamilyFixedC;
      return out;
    case CaseLabel::SL2CaseVI:
      out.family = fixed_c_family(group, t, FamilyConstraint::V2EqV1PlusV3, {1.0, 2.0, 1.0}, 0);
      out.kind = OutcomeKind::FamilyFixedC;
      note_sl2_axis_family(group, t, *out.family, 0, out.notes);
      return out;
    case CaseLabel::SL2CaseVII:
      out.family = fixed_c_family(group, t, FamilyConstraint::V1EqV2PlusV3, {2.0, 1.0, 1.0}, 1);
      out.kind = OutcomeKind::FamilyFixedC;
      note_sl2_axis_family(group, t, *out.family, 1, out.notes);
      return out;
    default: break;
  }
  finish_discrete(out);
  return out;
}

/// E2 (lambda = (2,2,0)) and E11 (lambda = (2,-2,0)) with T3 < 0 < T1 + T2 and
/// T1 T2 < 0. With v2 = 1 the ratio Ric11/Ric22 fixes r = v1 = -T1/T2 and the
/// ratio Ric33/Ric11 fixes v3; c follows from Ric33 = c T3.
inline Solution flat_plane_closed_form(const UnimodularGroup& group, const Vec3& t) {
  const double r = -t[0] / t[1];
  double v3 = 0.0;
  double c = 0.0;
  if (group.name == Group::E2) {
    v3 = -t[2] * r * (r + 1.0) / (t[0] * (r - 1.0));
    c = -2.0 * (r - 1.0) * (r - 1.0) / (r * t[2]);
  } else {
    v3 = -t[2] * r * (r - 1.0) / (t[0] * (r + 1.0));
    c = -2.0 * (r + 1.0) * (r + 1.0) / (r * t[2]);
  }
  return closed_form_solution(DiagonalMetric(r, 1.0, v3), c);
}

inline SolveOutcome solve_flat_plane(const UnimodularGroup& group, const Vec3& t,
                                     const SolverConfig& cfg) {
  SolveOutcome out;
  out.case_label = classify_signature(group, DiagonalTensor(t), cfg);
  switch (out.case_label) {
    case CaseLabel::E2Zero:
      out.family = any_c_family(FamilyConstraint::V1EqV2);
      out.kind = OutcomeKind::FamilyAnyC;
      return out;
    case CaseLabel::E11Flat:
      out.family = fixed_c_family(group, t, FamilyConstraint::V1EqV2, {1.0, 1.0, 1.0}, 2);
      out.kind = OutcomeKind::FamilyFixedC;
      return out;
    case CaseLabel::E2Mixed:
    case CaseLabel::E11Mixed: out.solutions.push_back(flat_plane_closed_form(group, t)); break;
    default: break;
  }
  finish_discrete(out);
  return out;
}

/// H3 (lambda = (2,0,0)) with T1 > 0 > T2, T3: v = (1, -T2/T1, -T3/T1), c = 2 T1 / (T2 T3).
inline SolveOutcome solve_h3(const UnimodularGroup& group, const Vec3& t, const SolverConfig& cfg) {
  SolveOutcome out;
  out.case_label = classify_signature(group, DiagonalTensor(t), cfg);
  if (out.case_label == CaseLabel::H3Mixed)
    out.solutions.push_back(closed_form_solution(DiagonalMetric(1.0, -t[1] / t[0], -t[2] / t[0]),
                                                 2.0 * t[0] / (t[1] * t[2])));
  finish_discrete(out);
  return out;
}

inline SolveOutcome solve_r3(const Vec3& t) {
  SolveOutcome out;
  if (all_zero(t)) {
    out.case_label = CaseLabel::R3Zero;
    out.family = any_c_family(FamilyConstraint::Any);
    out.kind = OutcomeKind::FamilyAnyC;
  }
  return out;
}

}  // namespace detail

/// Classifies (group, T) and constructs every solution class. Determined
/// solutions are normalized so that v1 v2 v3 c = 1.
inline SolveOutcome solve(const UnimodularGroup& group, const DiagonalTensor& tensor,
                          const SolverConfig& cfg = {}) {
  switch (group.name) {
    case Group::SO3: return detail::solve_so3(group, tensor.t, cfg);
    case Group::SL2: return detail::solve_sl2(group, tensor.t, cfg);
    case Group::E2:
    case Group::E11: return detail::solve_flat_plane(group, tensor.t, cfg);
    case Group::H3: return detail::solve_h3(group, tensor.t, cfg);
    case Group::R3: return detail::solve_r3(tensor.t);
  }
  return {};
}

}  // namespace ricci3
