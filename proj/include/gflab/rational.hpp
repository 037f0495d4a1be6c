#pragma once

#include <gmpxx.h>

#include <string>

namespace gflab {

using Rational = mpq_class;

/// Canonical "p/q" text (always with a denominator).
std::string to_string(const Rational& value);

/// Parses "p/q", "p", or a plain decimal literal such as "-0.375".
Rational parse_rational(const std::string& text);

/// Exact rational value of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

Rational factorial(unsigned n);

}  // namespace gflab
