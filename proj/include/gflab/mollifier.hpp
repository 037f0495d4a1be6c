#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gflab/rational.hpp"
#include "gflab/rational_poly.hpp"

namespace gflab {

/// Compactly supported parameter function
///   phi(u) = (1 - (u/l)^2)^s * P(u)  on [-l, l],  0 outside,
/// with int phi = 1 and int u^j phi = 0 for 1 <= j <= q, all exact.
class Mollifier {
 public:
  /// Takes the plain polynomial expansion of phi on [-l, l]. The moment
  /// conditions are checked exactly; ConfigError if they fail.
  Mollifier(Rational l, int s, int q, int d, std::uint64_t seed, RationalPoly phi);

  double l() const { return l_double_; }
  const Rational& l_exact() const { return l_; }
  int s() const { return s_; }
  int q() const { return q_; }
  int d() const { return d_; }
  std::uint64_t seed() const { return seed_; }

  const RationalPoly& poly() const { return derivatives_[1]; }
  /// Exact polynomial of phi^(r) on [-l, l]; r = -1 is the antiderivative
  /// vanishing at -l.
  const RationalPoly& derivative_poly(int r) const;
  /// Double coefficients of derivative_poly(r), ascending degree.
  const std::vector<double>& derivative_coeffs(int r) const;

  /// Cofactor T_r with phi^(r)(u) = (1 - (u/l)^2)^(s-r) T_r(u), r >= 0.
  const std::vector<double>& cofactor_coeffs(int r) const;

  /// phi^(r)(u), clamped outside the support.
  double eval_derivative(int r, double u) const;
  /// phi^(r) without clamping: the polynomial continued beyond [-l, l].
  /// Evaluated through the cofactor, which keeps full relative accuracy
  /// near the support ends where the monomial expansion cancels.
  double eval_polynomial(int r, double u) const;
  /// eval_polynomial(r, u) given accurately computed distances
  /// dl = u + l and dr = l - u; keeps relative accuracy next to the ends.
  double eval_with_distances(int r, double u, double dl, double dr) const;
  /// r-th derivative of phi_eps(x) = phi(x/eps)/eps.
  double eval_scaled(int r, double eps, double x) const;

  Rational moment(int j) const;
  /// int phi^2.
  Rational l2_norm_squared() const;
  /// int u phi^2.
  Rational first_moment_of_square() const;

  /// Short identifier, e.g. "q2-s10-l1/1-d2-seed3".
  std::string descriptor() const;
  std::string to_json() const;
  static Mollifier from_json(const std::string& text);

 private:
  Rational l_;
  double l_double_;
  int s_;
  int q_;
  int d_;
  std::uint64_t seed_;
  // Index r + 1 holds phi^(r), r = -1 .. s - 1.
  std::vector<RationalPoly> derivatives_;
  std::vector<std::vector<double>> derivative_coeffs_;
  std::vector<std::vector<double>> cofactors_;
  int antiderivative_nodes_ = 20;
};

using MollifierPtr = std::shared_ptr<const Mollifier>;

/// Builds phi in the basis (1-(u/l)^2)^s (u/l)^k, k = 0..q+d. The d free
/// coefficients are seeded pseudo-random rationals; the first q+1 are solved
/// from the moment system. Throws ConfigError if s < 2, q < 0 or l <= 0.
Mollifier build_mollifier(int q, int s, const Rational& l, std::uint64_t seed, int d = 2);

/// The default families used by claim verification: seeds 1..count.
std::vector<MollifierPtr> mollifier_families(int count, int q, int s, const Rational& l,
                                             int d = 2);

}  // namespace gflab
