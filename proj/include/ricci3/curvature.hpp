#pragma once

// Ricci curvature of left-invariant metrics, computed two independent ways:
// the closed form for a metric diagonal in a Milnor frame, and a generic
// Levi-Civita computation from structure constants and a Gram matrix.

#include <cmath>
#include <stdexcept>
#include <string>

#include "ricci3/lie_algebra.hpp"
#include "ricci3/linalg.hpp"

namespace ricci3 {

class InvalidMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// g(V_i, V_j) = delta_ij * v_i with every v_i > 0.
class DiagonalMetric {
 public:
  DiagonalMetric() = default;
  explicit DiagonalMetric(const Vec3& v) : v_(v) {
    for (double x : v_)
      if (!(x > 0.0) || !std::isfinite(x))
        throw InvalidMetric("diagonal metric components must be finite and positive");
  }

  DiagonalMetric(double v1, double v2, double v3) : DiagonalMetric(Vec3{v1, v2, v3}) {}

  const Vec3& components() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  double volume_factor() const { return v_[0] * v_[1] * v_[2]; }
  Mat3 gram() const { return diag3(v_); }

  DiagonalMetric scaled(double s) const { return DiagonalMetric(s * v_); }

 private:
  Vec3 v_{1.0, 1.0, 1.0};
};

/// x_i = (lambda_j v_j + lambda_k v_k - lambda_i v_i) / 2 for {i,j,k} = {1,2,3}.
using XCoefficients = Vec3;

/// Symmetric 3x3 tensor in the V-frame.
using SymmetricTensor3 = Mat3;

inline XCoefficients x_coefficients(const UnimodularGroup& group, const DiagonalMetric& metric) {
  const Vec3& l = group.lambda;
  const Vec3& v = metric.components();
  return {(l[1] * v[1] + l[2] * v[2] - l[0] * v[0]) / 2.0,
          (l[0] * v[0] + l[2] * v[2] - l[1] * v[1]) / 2.0,
          (l[0] * v[0] + l[1] * v[1] - l[2] * v[2]) / 2.0};
}

/// Ric(V_i, V_i) = 2 x_j x_k / (v_j v_k); the off-diagonal entries vanish.
inline Vec3 ricci_diagonal(const UnimodularGroup& group, const DiagonalMetric& metric) {
  const XCoefficients x = x_coefficients(group, metric);
  const Vec3& v = metric.components();
  return {2.0 * x[1] * x[2] / (v[1] * v[2]), 2.0 * x[0] * x[2] / (v[0] * v[2]),
          2.0 * x[0] * x[1] / (v[0] * v[1])};
}

/// Ricci tensor of the left-invariant metric with Gram matrix g in the frame
/// whose brackets are given by sc.
///
/// Connection: 2<D_i e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>.
/// Curvature:  R(e_i,e_j)e_k = D_i D_j e_k - D_j D_i e_k - D_[e_i,e_j] e_k.
/// Ricci:      Ric(e_j,e_k) = trace(X -> R(X,e_j)e_k).
inline SymmetricTensor3 ricci_koszul(const StructureConstants& sc, const Mat3& g) {
  if (!is_symmetric(g, 1e-14) || !is_positive_definite(g))
    throw InvalidMetric("Gram matrix must be symmetric positive-definite");
  const Mat3 ginv = inverse(g);

  // b[i][j][k] = <[e_i, e_j], e_k>
  double b[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int m = 0; m < 3; ++m) s += sc.c[i][j][m] * g[m][k];
        b[i][j][k] = s;
      }

  // gamma[i][j][l]: coefficient of e_l in D_{e_i} e_j
  double gamma[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double lowered[3];
      for (int k = 0; k < 3; ++k) lowered[k] = 0.5 * (b[i][j][k] - b[j][k][i] + b[k][i][j]);
      for (int l = 0; l < 3; ++l) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += ginv[l][k] * lowered[k];
        gamma[i][j][l] = s;
      }
    }

  // r[i][j][k][m]: coefficient of e_m in R(e_i, e_j) e_k
  Mat3 ric{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // only the m == i component contributes to the trace
        const int m = i;
        double s = 0.0;
        for (int l = 0; l < 3; ++l)
          s += gamma[j][k][l] * gamma[i][l][m] - gamma[i][k][l] * gamma[j][l][m];
        for (int n = 0; n < 3; ++n) s -= sc.c[i][j][n] * gamma[n][k][m];
        ric[j][k] += s;
      }
  return ric;
}

inline SymmetricTensor3 ricci_koszul(const UnimodularGroup& group, const DiagonalMetric& metric) {
  return ricci_koszul(structure_constants(group), metric.gram());
}

}  // namespace ricci3
