#include "gflab/rational.hpp"

#include <cmath>

#include "gflab/errors.hpp"

namespace gflab {

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw ConfigError("parse_rational: empty string");
  }
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      Rational value(text, 10);
      if (value.get_den() == 0) {
        throw ConfigError("parse_rational: zero denominator in '" + text + "'");
      }
      value.canonicalize();
      return value;
    }
    // Decimal literal: shift the point into the denominator.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") {
      throw ConfigError("parse_rational: malformed decimal '" + text + "'");
    }
    if (digits[0] == '+') {
      digits.erase(0, 1);
    }
    mpz_class numerator(digits, 10);
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, text.size() - dot - 1);
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
  } catch (const std::invalid_argument&) {
    throw ConfigError("parse_rational: malformed number '" + text + "'");
  }
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("rational_from_double: non-finite value");
  }
  return Rational(value);
}

double to_double(const Rational& value) { return value.get_d(); }

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return Rational(result);
}

}  // namespace gflab
