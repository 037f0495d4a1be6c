#include "gflab/rational_poly.hpp"

#include <sstream>

#include "gflab/errors.hpp"

namespace gflab {

RationalPoly::RationalPoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

RationalPoly::RationalPoly(const Rational& constant) : coefficients_{constant} { normalize(); }

RationalPoly RationalPoly::monomial(unsigned degree, const Rational& coefficient) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coefficient;
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::linear(const Rational& slope, const Rational& offset) {
  return RationalPoly(std::vector<Rational>{offset, slope});
}

void RationalPoly::normalize() {
  for (auto& c : coefficients_) {
    c.canonicalize();
  }
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Rational RationalPoly::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

RationalPoly RationalPoly::derivative(unsigned order) const {
  std::vector<Rational> c = coefficients_;
  for (unsigned step = 0; step < order && !c.empty(); ++step) {
    std::vector<Rational> next;
    for (std::size_t k = 1; k < c.size(); ++k) {
      next.push_back(c[k] * static_cast<long>(k));
    }
    c = std::move(next);
  }
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> c(coefficients_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    c[k + 1] = coefficients_[k] / static_cast<long>(k + 1);
  }
  return RationalPoly(std::move(c));
}

Rational RationalPoly::integrate(const Rational& lo, const Rational& hi) const {
  const RationalPoly anti = antiderivative();
  return anti(hi) - anti(lo);
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational result(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result = result * x + *it;
  }
  return result;
}

RationalPoly RationalPoly::compose_linear(const Rational& slope, const Rational& offset) const {
  const RationalPoly inner = linear(slope, offset);
  RationalPoly result;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result *= inner;
    result += RationalPoly(*it);
  }
  return result;
}

RationalPoly RationalPoly::pow(unsigned exponent) const {
  RationalPoly result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) {
    result *= *this;
  }
  return result;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) {
    throw ConfigError("RationalPoly: division by the zero polynomial");
  }
  std::vector<Rational> rem = coefficients_;
  const int dd = divisor.degree();
  const Rational& lead = divisor.coefficients_.back();
  if (degree() < dd) {
    return {RationalPoly(), *this};
  }
  std::vector<Rational> quot(degree() - dd + 1, Rational(0));
  for (int k = degree(); k >= dd; --k) {
    const Rational factor = rem[k] / lead;
    quot[k - dd] = factor;
    if (factor == 0) {
      continue;
    }
    for (int j = 0; j <= dd; ++j) {
      rem[k - dd + j] -= factor * divisor.coefficients_[j];
    }
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::vector<double> RationalPoly::to_double_coefficients() const {
  std::vector<double> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) {
    out.push_back(c.get_d());
  }
  return out;
}

std::string RationalPoly::to_string(const std::string& variable) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == 0) {
      continue;
    }
    if (!first) {
      out << " + ";
    }
    first = false;
    out << "(" << coefficients_[k].get_str() << ")";
    if (k > 0) {
      out << "*" << variable;
      if (k > 1) {
        out << "^" << k;
      }
    }
  }
  return out.str();
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1,
                                Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(product);
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) {
    c *= scalar;
  }
  normalize();
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly result(*this);
  for (auto& c : result.coefficients_) {
    c = -c;
  }
  return result;
}

double horner(const std::vector<double>& coefficients, double x) {
  double result = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    result = result * x + *it;
  }
  return result;
}

}  // namespace gflab
