#pragma once

// Residuals of a claimed solution (metric, c) of Ric(g) = c T, measured with
// both curvature implementations.

#include <algorithm>
#include <cmath>

#include "ricci3/curvature.hpp"
#include "ricci3/solver.hpp"

namespace ricci3 {

inline constexpr double kCertifyThreshold = 1e-9;
inline constexpr double kNormalizationTol = 1e-10;

/// max_i |Ric_i(v) - c T_i| / (1 + |c| max|T_i|) with the closed-form Ricci.
inline double residual(const UnimodularGroup& group, const DiagonalMetric& metric, double c,
                       const DiagonalTensor& tensor) {
  const Vec3 ric = ricci_diagonal(group, metric);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(ric[i] - c * tensor[i]));
  return worst / (1.0 + std::abs(c) * tensor.norm_inf());
}

/// Same scaling as residual(), over all nine entries of the oracle Ricci
/// tensor against c diag(T).
inline double residual_oracle(const UnimodularGroup& group, const DiagonalMetric& metric, double c,
                              const DiagonalTensor& tensor) {
  const Mat3 ric = ricci_koszul(group, metric);
  const Mat3 target = c * diag3(tensor.t);
  return max_abs(ric - target) / (1.0 + std::abs(c) * tensor.norm_inf());
}

struct Certificate {
  double residual_closed_form = 0.0;
  double residual_oracle = 0.0;
  bool normalized = false;  // v1 v2 v3 c = 1 within kNormalizationTol
  bool pass = false;
};

inline Certificate certify(const UnimodularGroup& group, const DiagonalMetric& metric, double c,
                           const DiagonalTensor& tensor, double threshold = kCertifyThreshold) {
  Certificate cert;
  cert.residual_closed_form = residual(group, metric, c, tensor);
  cert.residual_oracle = residual_oracle(group, metric, c, tensor);
  cert.normalized = std::abs(metric.volume_factor() * c - 1.0) <= kNormalizationTol;
  cert.pass = c > 0.0 && cert.residual_closed_form <= threshold && cert.residual_oracle <= threshold;
  return cert;
}

/// Certifies every solution and the family sample carried by an outcome.
/// NoSolution outcomes certify vacuously.
inline bool certify_outcome(const UnimodularGroup& group, const DiagonalTensor& tensor,
                            const SolveOutcome& outcome, double threshold = kCertifyThreshold) {
  for (const auto& s : outcome.solutions)
    if (!certify(group, s.metric, s.c, tensor, threshold).pass) return false;
  if (outcome.family && !certify(group, outcome.family->sample, outcome.family->sample_c, tensor,
                                 threshold)
                             .pass)
    return false;
  return true;
}

}  // namespace ricci3
