#include "gflab/test_function.hpp"

#include <cmath>

#include "gflab/errors.hpp"

namespace gflab {

TestFunction::TestFunction(Rational support, int m, RationalPoly q, std::string name)
    : support_(std::move(support)), m_(m), q_(std::move(q)), name_(std::move(name)) {
  support_.canonicalize();
  if (support_ <= 0) {
    throw ConfigError("test function: support radius must be positive");
  }
  if (m_ < 2) {
    throw ConfigError("test function: smoothness m must be at least 2");
  }
  support_double_ = support_.get_d();
  const RationalPoly base(
      std::vector<Rational>{Rational(1), Rational(0), -1 / (support_ * support_)});
  poly_ = base.pow(static_cast<unsigned>(m_)) * q_;
  coeffs_ = poly_.to_double_coefficients();
  q_coeffs_ = q_.to_double_coefficients();
}

double TestFunction::operator()(double x) const {
  if (x <= -support_double_ || x >= support_double_) {
    return 0.0;
  }
  const double t = x / support_double_;
  return std::pow((1.0 - t) * (1.0 + t), m_) * horner(q_coeffs_, x);
}

RationalPoly TestFunction::derivative_poly(int n) const {
  if (n < 0) {
    throw ConfigError("test function: negative derivative order");
  }
  return poly_.derivative(static_cast<unsigned>(n));
}

Rational TestFunction::derivative_at_zero(int n) const {
  if (n < 0) {
    throw ConfigError("test function: negative derivative order");
  }
  return poly_.coefficient(static_cast<std::size_t>(n)) * factorial(static_cast<unsigned>(n));
}

TestFunction make_test_function(const Rational& support, int m, const RationalPoly& q,
                                const std::string& name) {
  return TestFunction(support, m, q, name);
}

std::vector<TestFunction> default_test_functions() {
  const Rational support(2);
  const int m = 8;
  std::vector<TestFunction> out;
  out.emplace_back(support, m, RationalPoly(Rational(1)), "even");
  out.emplace_back(support, m,
                   RationalPoly(std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3),
                                                      Rational(1, 5), Rational(1, 7)}),
                   "generic");
  out.emplace_back(support, m,
                   RationalPoly(std::vector<Rational>{Rational(0), Rational(1), Rational(1, 3)}),
                   "zero");
  return out;
}

TestFunction default_test_function(const std::string& name) {
  for (auto& psi : default_test_functions()) {
    if (psi.name() == name) {
      return psi;
    }
  }
  throw ConfigError("unknown test function '" + name + "' (expected even, generic or zero)");
}

}  // namespace gflab
