#pragma once

// The six three-dimensional unimodular Lie algebras in a Milnor frame
// V1, V2, V3, where [V_i, V_j] = sum_k eps_ijk * lambda_k * V_k.
//
// Frame changes use the column convention X_i = sum_j M[j][i] V_j: column i
// of M holds the coordinates of the new basis vector X_i in the V-frame.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ricci3/linalg.hpp"

namespace ricci3 {

enum class Group { SO3, SL2, E2, E11, H3, R3 };

inline constexpr std::array<Group, 6> kAllGroups{Group::SO3, Group::SL2, Group::E2,
                                                 Group::E11, Group::H3,  Group::R3};

struct UnimodularGroup {
  Group name;
  Vec3 lambda;

  constexpr explicit UnimodularGroup(Group g) : name(g), lambda(lambda_of(g)) {}

  static constexpr Vec3 lambda_of(Group g) {
    switch (g) {
      case Group::SO3: return {2.0, 2.0, 2.0};
      case Group::SL2: return {2.0, 2.0, -2.0};
      case Group::E2: return {2.0, 2.0, 0.0};
      case Group::E11: return {2.0, -2.0, 0.0};
      case Group::H3: return {2.0, 0.0, 0.0};
      case Group::R3: return {0.0, 0.0, 0.0};
    }
    return {0.0, 0.0, 0.0};
  }

  friend constexpr bool operator==(const UnimodularGroup& a, const UnimodularGroup& b) {
    return a.name == b.name;
  }
};

/// Lower-case identifier used on the command line and in reports.
constexpr std::string_view group_id(Group g) {
  switch (g) {
    case Group::SO3: return "so3";
    case Group::SL2: return "sl2";
    case Group::E2: return "e2";
    case Group::E11: return "e11";
    case Group::H3: return "h3";
    case Group::R3: return "r3";
  }
  return "?";
}

constexpr std::string_view group_display_name(Group g) {
  switch (g) {
    case Group::SO3: return "SO3";
    case Group::SL2: return "SL2";
    case Group::E2: return "E2";
    case Group::E11: return "E11";
    case Group::H3: return "H3";
    case Group::R3: return "R3";
  }
  return "?";
}

/// Case-insensitive lookup of "so3", "sl2", "e2", "e11", "h3", "r3".
inline std::optional<Group> parse_group(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (Group g : kAllGroups)
    if (lower == group_id(g)) return g;
  return std::nullopt;
}

/// Levi-Civita symbol on {0,1,2}.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((i + 1) % 3 == j) ? 1 : -1;
}

struct StructureConstants {
  // c[i][j][k]: coefficient of V_k in [V_i, V_j].
  std::array<std::array<std::array<double, 3>, 3>, 3> c{};

  constexpr double operator()(int i, int j, int k) const { return c[i][j][k]; }
};

constexpr StructureConstants structure_constants(const UnimodularGroup& group) {
  StructureConstants sc{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) sc.c[i][j][k] = levi_civita(i, j, k) * group.lambda[k];
  return sc;
}

constexpr Vec3 bracket(const StructureConstants& sc, const Vec3& u, const Vec3& v) {
  Vec3 w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double uv = u[i] * v[j];
      if (uv == 0.0) continue;
      for (int k = 0; k < 3; ++k) w[k] += uv * sc.c[i][j][k];
    }
  return w;
}

/// Coordinates of [u,[v,w]] + [v,[w,u]] + [w,[u,v]].
constexpr Vec3 jacobiator(const StructureConstants& sc, const Vec3& u, const Vec3& v,
                          const Vec3& w) {
  return bracket(sc, u, bracket(sc, v, w)) + bracket(sc, v, bracket(sc, w, u)) +
         bracket(sc, w, bracket(sc, u, v));
}

/// A frame change together with whether it was built to preserve the brackets.
struct BasisChange {
  Mat3 m = identity3();
  bool bracket_preserving = false;
};

class InvalidBasis : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structure constants of the frame X_i = sum_j m[j][i] V_j, expressed in that
/// frame. Throws InvalidBasis when m is singular.
inline StructureConstants transformed_structure_constants(const UnimodularGroup& group,
                                                          const Mat3& m) {
  Mat3 inv;
  try {
    inv = inverse(m);
  } catch (const std::domain_error&) {
    throw InvalidBasis("basis change matrix is singular");
  }
  const StructureConstants sc = structure_constants(group);
  StructureConstants out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vec3 in_v = bracket(sc, column(m, i), column(m, j));
      const Vec3 in_x = inv * in_v;
      for (int k = 0; k < 3; ++k) out.c[i][j][k] = in_x[k];
    }
  return out;
}

/// True when the columns of m again form a Milnor frame for the same lambda
/// triple, i.e. every structure constant in the new frame is within tol of
/// eps_ijk * lambda_k.
inline bool check_milnor_frame(const UnimodularGroup& group, const Mat3& m, double tol = 1e-10) {
  const StructureConstants got = transformed_structure_constants(group, m);
  const StructureConstants want = structure_constants(group);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!(std::abs(got.c[i][j][k] - want.c[i][j][k]) <= tol)) return false;
  return true;
}

inline bool check_milnor_frame(const UnimodularGroup& group, const BasisChange& change,
                               double tol = 1e-10) {
  return check_milnor_frame(group, change.m, tol);
}

}  // namespace ricci3
