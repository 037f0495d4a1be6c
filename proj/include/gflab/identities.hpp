#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "gflab/rational.hpp"
#include "gflab/rational_poly.hpp"

namespace gflab {

/// a -> C(a + c, n) as an exact polynomial in a; the constant 0 for n < 0.
RationalPoly binom_poly(const Rational& c, int n);
/// a -> C(slope * a + c, n).
RationalPoly binom_poly(const Rational& slope, const Rational& c, int n);
/// C(x, n) for rational x by the product formula.
Rational binom_rational(const Rational& x, int n);

struct IdentityCertificate {
  std::string identity_id;
  nlohmann::ordered_json parameters;
  bool status = false;
  /// Nonzero difference polynomial or the first mismatching sample.
  std::string detail;
};

/// C(-a-1, n) (-1)^n = C(a+n, n) and C(-x, n) = (-1)^n C(x+n-1, n) for
/// every n <= n_max, as exact polynomial equalities.
std::vector<IdentityCertificate> reflection_certificates(int n_max);
/// True iff every reflection certificate up to n_max holds; p must not exceed n_max.
bool verify_reflection(int p, int n_max);

/// C(x+y, n) = sum_k C(x,k) C(y,n-k) on a tensor grid of (n+1) x (n+1)
/// distinct seeded rationals (at least `samples` per axis), for n <= n_max.
std::vector<IdentityCertificate> addition_certificates(int n_max, int samples,
                                                       std::uint64_t seed = 7);
bool verify_addition(int n_max, int samples);

/// (-1)^p C(-a-1,p)/2 + C(a+p,p)/2 = C(a+p,p) for p <= p_max.
std::vector<IdentityCertificate> r_sum_certificates(int p_max);
bool verify_r_sum(int p_max);

/// For h <= h_max and m < h:
///   even: sum_{t=0}^{2m+1} [C(m-h,2m+1-t) + C(m-h+1,2m+1-t)] C(-a-1,t)
///           = -[C(a+h+m+1,2m+1) + C(a+h+m,2m+1)]
///   odd:  sum_{t=0}^{2m} [C(m-h,2m-t) + C(m-h+1,2m-t)] C(-a-1,t)
///           = C(a+h+m,2m) + C(a+h+m-1,2m)
std::vector<IdentityCertificate> s_reduction_certificates(int h_max);
bool verify_S_reduction(int h_max);

/// Left and right sides of the odd S-reduction as polynomials in a.
std::pair<RationalPoly, RationalPoly> s_reduction_odd_sides(int h, int m);
std::pair<RationalPoly, RationalPoly> s_reduction_even_sides(int h, int m);

/// Evaluates the reflection, R-sum and S-reduction polynomials at `count`
/// seeded real points and compares with binomial_real to 1e-10.
std::vector<IdentityCertificate> float_cross_check(int p_max, int h_max, int count = 20,
                                                   std::uint64_t seed = 11);

/// Every suite above, in a fixed order.
std::vector<IdentityCertificate> run_identity_suite(int p_max, int n_max, int h_max);

nlohmann::ordered_json certificates_to_json(const std::vector<IdentityCertificate>& certs);

}  // namespace gflab
