#pragma once

// Fixed-size 3x3 helpers. Matrices are row-major: m[row][col].

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ricci3 {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

constexpr Mat3 identity3() {
  return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
}

constexpr Mat3 diag3(const Vec3& d) {
  return {{{d[0], 0.0, 0.0}, {0.0, d[1], 0.0}, {0.0, 0.0, d[2]}}};
}

constexpr Vec3 diagonal_of(const Mat3& m) { return {m[0][0], m[1][1], m[2][2]}; }

constexpr Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

constexpr Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 w{};
  for (int i = 0; i < 3; ++i) w[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return w;
}

constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

constexpr Mat3 operator*(double s, const Mat3& m) {
  Mat3 r = m;
  for (auto& row : r)
    for (auto& x : row) x *= s;
  return r;
}

constexpr Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

constexpr Vec3 column(const Mat3& m, int j) { return {m[0][j], m[1][j], m[2][j]}; }

constexpr double det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline double max_abs(const Vec3& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

inline double max_abs(const Mat3& m) {
  return std::max({max_abs(m[0]), max_abs(m[1]), max_abs(m[2])});
}

inline double max_abs_off_diagonal(const Mat3& m) {
  return std::max({std::abs(m[0][1]), std::abs(m[0][2]), std::abs(m[1][0]),
                   std::abs(m[1][2]), std::abs(m[2][0]), std::abs(m[2][1])});
}

/// Mᵀ·A·M, the Gram matrix of a bilinear form A after the frame change whose
/// columns are the new basis vectors.
constexpr Mat3 congruence(const Mat3& a, const Mat3& m) { return transpose(m) * a * m; }

/// Throws std::domain_error when |det| is below rel_tol times the product of
/// the column norms.
inline Mat3 inverse(const Mat3& m, double rel_tol = 1e-14) {
  const double d = det(m);
  double scale = 1.0;
  for (int j = 0; j < 3; ++j) {
    const Vec3 c = column(m, j);
    scale *= std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  }
  if (!(std::abs(d) > rel_tol * scale)) throw std::domain_error("singular 3x3 matrix");
  Mat3 inv{};
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return inv;
}

inline bool is_symmetric(const Mat3& m, double tol = 0.0) {
  const double s = tol * std::max(1.0, max_abs(m));
  return std::abs(m[0][1] - m[1][0]) <= s && std::abs(m[0][2] - m[2][0]) <= s &&
         std::abs(m[1][2] - m[2][1]) <= s;
}

/// Sylvester's criterion on the leading principal minors.
inline bool is_positive_definite(const Mat3& m) {
  const double m1 = m[0][0];
  const double m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m1 > 0.0 && m2 > 0.0 && det(m) > 0.0;
}

}  // namespace ricci3
