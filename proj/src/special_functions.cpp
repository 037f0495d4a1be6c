#include "gflab/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gflab/errors.hpp"

namespace gflab {

namespace {

// g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  x -= 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  // Split the power so that t^(x+1/2) does not overflow before e^-t is applied.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * sum;
}

}  // namespace

bool near_integer(double x, double tol) {
  return std::abs(x - std::round(x)) < tol;
}

double sin_pi(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("sin_pi: non-finite argument");
  }
  double r = std::fmod(x, 2.0);  // exact
  if (r < 0.0) {
    r += 2.0;
  }
  // r in [0, 2); fold onto [-1/2, 1/2] using sin(pi (1 - r)) = sin(pi r).
  double sign = 1.0;
  if (r > 1.0) {
    r -= 1.0;
    sign = -1.0;
  }
  if (r > 0.5) {
    r = 1.0 - r;
  }
  if (r == 0.0) {
    return 0.0;
  }
  return sign * std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("gamma: non-finite argument");
  }
  if (x <= 0.5 && near_integer(x)) {
    std::ostringstream msg;
    msg << "gamma: pole at x = " << x;
    throw PoleError(msg.str());
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double binomial_real(double x, int n) {
  if (n < 0) {
    return 0.0;
  }
  double result = 1.0;
  for (int i = 0; i < n; ++i) {
    result *= (x - i) / (i + 1);
  }
  return result;
}

double beta_ratio(double a, double b) {
  if (!(a > -1.0) || !(b > -1.0)) {
    std::ostringstream msg;
    msg << "beta_ratio: requires a, b > -1 (got a = " << a << ", b = " << b << ")";
    throw DomainError(msg.str());
  }
  return gamma(a + 1.0) * gamma(b + 1.0) / gamma(a + b + 2.0);
}

}  // namespace gflab
