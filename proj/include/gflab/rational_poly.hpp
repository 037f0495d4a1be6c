#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gflab/rational.hpp"

namespace gflab {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Always normalized: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  RationalPoly(const Rational& constant);  // NOLINT: implicit by design of the algebra

  static RationalPoly monomial(unsigned degree, const Rational& coefficient = 1);
  /// The polynomial slope * x + offset.
  static RationalPoly linear(const Rational& slope, const Rational& offset);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  RationalPoly derivative(unsigned order = 1) const;
  /// Antiderivative vanishing at x = 0.
  RationalPoly antiderivative() const;
  /// Exact value of the integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

  Rational operator()(const Rational& x) const;
  /// Evaluates p(slope * x + offset) as a polynomial in x.
  RationalPoly compose_linear(const Rational& slope, const Rational& offset) const;
  RationalPoly pow(unsigned exponent) const;
  /// Quotient and remainder of polynomial division; ConfigError on a zero divisor.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;

  std::vector<double> to_double_coefficients() const;
  std::string to_string(const std::string& variable = "x") const;

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& scalar);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const RationalPoly& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(const Rational& lhs, RationalPoly rhs) { return rhs *= lhs; }
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& lhs, const RationalPoly& rhs) {
    return lhs.coefficients_ == rhs.coefficients_;
  }

 private:
  void normalize();

  std::vector<Rational> coefficients_;
};

/// Horner evaluation of double coefficients (ascending degree).
double horner(const std::vector<double>& coefficients, double x);

}  // namespace gflab
