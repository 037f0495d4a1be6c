#pragma once

namespace gflab {

/// Gamma function for real arguments. Lanczos approximation for x >= 0.5,
/// reflection below. Throws PoleError within 1e-9 of 0, -1, -2, ...
double gamma(double x);

/// Generalized binomial coefficient x(x-1)...(x-n+1)/n!; 1 for n == 0 and
/// 0 for n < 0.
double binomial_real(double x, int n);

/// Euler integral of the first kind, int_0^1 (1-t)^a t^b dt, i.e.
/// Gamma(a+1) Gamma(b+1) / Gamma(a+b+2). Requires a, b > -1.
double beta_ratio(double a, double b);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// True when x lies within `tol` of an integer.
bool near_integer(double x, double tol = 1e-9);

}  // namespace gflab
