#pragma once

// Brings a symmetric tensor on so(3) to diagonal form by a rotation of the
// Milnor frame. Every rotation preserves the so(3) brackets, so the result is
// again a Milnor frame.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ricci3/linalg.hpp"
#include "ricci3/solver.hpp"

namespace ricci3 {

struct DiagonalizationResult {
  BasisChange rotation;   // orthogonal, det +1; columns are the new frame
  DiagonalTensor diagonal;  // descending
};

/// Cyclic Jacobi eigendecomposition of a symmetric 3x3 matrix. Eigenvalues are
/// sorted descending and the last column is negated if needed to make the
/// rotation proper.
inline DiagonalizationResult diagonalize_so3(const SymmetricTensor3& t_full) {
  if (!is_symmetric(t_full, 1e-12)) throw std::invalid_argument("tensor must be symmetric");
  Mat3 a = t_full;
  Mat3 v = identity3();
  const double norm = std::max(max_abs(a), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 20; ++sweep) {
    const double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off <= 1e-14 * norm) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 rot = identity3();
        rot[p][p] = c;
        rot[q][q] = c;
        rot[p][q] = s;
        rot[q][p] = -s;
        a = congruence(a, rot);
        a[p][q] = a[q][p] = 0.0;
        v = v * rot;
      }
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] > a[j][j]; });
  Mat3 r{};
  Vec3 eig{};
  for (int k = 0; k < 3; ++k) {
    eig[k] = a[order[k]][order[k]];
    for (int row = 0; row < 3; ++row) r[row][k] = v[row][order[k]];
  }
  if (det(r) < 0.0)
    for (int row = 0; row < 3; ++row) r[row][2] = -r[row][2];

  return {BasisChange{r, true}, DiagonalTensor(eig)};
}

}  // namespace ricci3
