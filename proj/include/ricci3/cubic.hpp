#pragma once

// Real root isolation for polynomials of degree <= 3 on an open interval.
//
// The real line is split at the critical points, each monotone piece is
// checked for a sign change and the root is polished by safeguarded Newton
// iteration inside the bracket. A critical point where the polynomial
// vanishes (relative to its term magnitude) is reported as a multiple root.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ricci3 {

class DegeneratePolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a3 p^3 + a2 p^2 + a1 p + a0
struct CubicPoly {
  double a3 = 0.0;
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  constexpr double operator()(double p) const { return ((a3 * p + a2) * p + a1) * p + a0; }
  constexpr double derivative(double p) const { return (3.0 * a3 * p + 2.0 * a2) * p + a1; }

  /// Sum of |a_k| |p|^k, the scale against which a value at p is "zero".
  double magnitude(double p) const {
    const double ap = std::abs(p);
    return ((std::abs(a3) * ap + std::abs(a2)) * ap + std::abs(a1)) * ap + std::abs(a0);
  }

  int degree() const {
    if (a3 != 0.0) return 3;
    if (a2 != 0.0) return 2;
    if (a1 != 0.0) return 1;
    return 0;
  }
};

struct RootReport {
  std::vector<double> roots;        // ascending
  std::vector<int> multiplicities;  // 1, 2 or 3

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  int total_multiplicity() const {
    int s = 0;
    for (int m : multiplicities) s += m;
    return s;
  }
};

namespace detail {

/// Root of a strictly monotone polynomial piece with f(lo), f(hi) of opposite
/// signs, polished to the last few ulps. Downstream reconstruction can amplify
/// the error in the root by several orders of magnitude.
inline double polish_bracketed(const CubicPoly& f, double lo, double hi, double flo) {
  const double tol = 4.0 * std::numeric_limits<double>::epsilon();
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 2000; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = f.derivative(x);
    double next = (d != 0.0) ? x - fx / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= tol * std::abs(x)) return x;
    if (hi - lo <= tol * std::max(std::abs(lo), std::abs(hi))) return 0.5 * (lo + hi);
  }
  return x;
}

/// Real roots of a q2 p^2 + q1 p + q0 (q2 != 0), ascending, using the
/// cancellation-free form of the quadratic formula. A discriminant within
/// rel_tol of zero yields one repeated root.
inline std::vector<double> quadratic_roots(double q2, double q1, double q0, double rel_tol) {
  const double disc = q1 * q1 - 4.0 * q2 * q0;
  const double scale = q1 * q1 + std::abs(4.0 * q2 * q0);
  if (std::abs(disc) <= rel_tol * scale) return {-q1 / (2.0 * q2)};
  if (disc < 0.0) return {};
  const double s = std::sqrt(disc);
  const double t = -0.5 * (q1 + (q1 >= 0.0 ? s : -s));
  double r1 = t / q2;
  double r2 = (t != 0.0) ? q0 / t : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace detail

/// Every real root of poly in the open interval (lo, hi), with multiplicity.
/// Either bound may be infinite. Throws DegeneratePolynomial when every
/// coefficient is below the underflow scale.
inline RootReport roots_in_interval(const CubicPoly& poly, double lo, double hi,
                                    double tol = 1e-12) {
  if (!(lo < hi)) throw std::invalid_argument("roots_in_interval: require lo < hi");
  const double tiny = std::numeric_limits<double>::min();
  if (std::abs(poly.a3) < tiny && std::abs(poly.a2) < tiny && std::abs(poly.a1) < tiny &&
      std::abs(poly.a0) < tiny)
    throw DegeneratePolynomial("all polynomial coefficients vanish");

  RootReport report;
  const int deg = poly.degree();
  if (deg == 0) return report;

  // Cauchy bound: all real roots lie in (-bound, bound).
  const double lead = deg == 3 ? poly.a3 : deg == 2 ? poly.a2 : poly.a1;
  double bound = 0.0;
  const double coeffs[4] = {poly.a0, poly.a1, poly.a2, poly.a3};
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(coeffs[k] / lead));
  bound += 1.0;

  // Critical points and the multiple roots sitting on them.
  std::vector<double> crit;
  bool merged_inflection = false;
  if (deg == 3) {
    crit = detail::quadratic_roots(3.0 * poly.a3, 2.0 * poly.a2, poly.a1, tol);
    merged_inflection = crit.size() == 1;
  } else if (deg == 2) {
    crit = {-poly.a1 / (2.0 * poly.a2)};
  }

  std::vector<std::pair<double, int>> multiple;  // (root, multiplicity)
  {
    std::vector<double> flat;
    for (double c : crit)
      if (std::abs(poly(c)) <= tol * poly.magnitude(c)) flat.push_back(c);
    if (flat.size() == 2) {
      // a cubic cannot have two distinct double roots: the pair is a split triple root
      multiple.emplace_back(0.5 * (flat[0] + flat[1]), 3);
    } else if (flat.size() == 1) {
      multiple.emplace_back(flat[0], merged_inflection ? 3 : 2);
    }
  }
  auto is_multiple_root = [&](double c) {
    for (const auto& [r, m] : multiple)
      if (r == c) return true;
    return false;
  };

  std::vector<std::pair<double, int>> found;
  for (const auto& [r, m] : multiple)
    if (r > lo && r < hi) found.emplace_back(r, m);

  // Monotone pieces between consecutive breakpoints.
  std::vector<double> breaks;
  breaks.push_back(-bound);
  for (double c : crit)
    if (c > -bound && c < bound) breaks.push_back(c);
  breaks.push_back(bound);
  if (multiple.size() == 1 && multiple.front().second == 3 && crit.size() == 2) {
    // split triple root: the stretch between the two critical points is a single flat spot
    breaks = {-bound, multiple.front().first, bound};
  }

  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    double a = std::max(breaks[s], lo);
    double b = std::min(breaks[s + 1], hi);
    if (!(a < b)) continue;
    const bool a_is_root = is_multiple_root(breaks[s]) && a == breaks[s];
    const bool b_is_root = is_multiple_root(breaks[s + 1]) && b == breaks[s + 1];
    if (a_is_root || b_is_root) continue;  // monotone piece already touching zero
    const double fa = poly(a);
    const double fb = poly(b);
    if (fa == 0.0 || fb == 0.0) continue;
    if ((fa < 0.0) == (fb < 0.0)) continue;
    found.emplace_back(detail::polish_bracketed(poly, a, b, fa), 1);
  }

  std::sort(found.begin(), found.end());
  for (const auto& [r, m] : found) {
    report.roots.push_back(r);
    report.multiplicities.push_back(m);
  }
  return report;
}

}  // namespace ricci3
