#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gflab/embeddings.hpp"
#include "gflab/test_function.hpp"

namespace gflab {

struct PairingResult {
  double epsilon = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool flagged = false;
};

/// A test function seen only through evaluation and its support [lo, hi].
struct TestFunctionView {
  std::function<double(double)> eval;
  double lo;
  double hi;
};

TestFunctionView view(const TestFunction& psi);

/// F(eps) = int f(phi_eps, x) psi(x) dx, integrated in w = -x/eps on
/// Gauss-Legendre panels broken at 0, +-l and graded toward +-l. The error
/// estimate compares each panel with its bisection. The result is flagged
/// when the estimate exceeds 1e-8 max(1, |F|); QuadratureError is thrown
/// above 1e-6 max(1, |F|, int |f psi|).
PairingResult pair(const GeneralizedFunctionRep& f, const TestFunction& psi, double eps);
PairingResult pair(const GeneralizedFunctionRep& f, const TestFunctionView& psi, double eps);

/// Pairings of every product term separately, indexed [term][eps]. Profiles
/// shared across eps are evaluated once.
std::vector<std::vector<PairingResult>> pair_terms(const GeneralizedFunctionRep& f,
                                                   const TestFunctionView& psi,
                                                   const std::vector<double>& eps);

/// Sum over terms of pair_terms.
std::vector<PairingResult> pair_sweep(const GeneralizedFunctionRep& f, const TestFunction& psi,
                                      const std::vector<double>& eps);
std::vector<PairingResult> sum_terms(const std::vector<std::vector<PairingResult>>& per_term,
                                     const std::vector<double>& eps);

struct Distribution {
  enum class Kind { DeltaP, XNegPower, Nu, Zero };
  Kind kind = Kind::Zero;
  int order = 0;
  Sign sign = Sign::Plus;
  double a = 0.0;

  static Distribution delta(int p) { return {Kind::DeltaP, p, Sign::Plus, 0.0}; }
  static Distribution x_neg_power(int n) { return {Kind::XNegPower, n, Sign::Plus, 0.0}; }
  static Distribution nu(Sign sign, double a) { return {Kind::Nu, 0, sign, a}; }
  static Distribution zero() { return {}; }
  std::string label() const;
};

/// Exact or quadrature value of <u, psi>:
///   delta^(p)  -> (-1)^p psi^(p)(0)
///   x^{-n}     -> -(1/(n-1)!) int ln|x| psi^(n)(x) dx
///   nu_+-^a    -> (+-1)^r / Gamma(a+r+1) int_0^L x^{a+r} psi^(r)(+-x) dx
double action(const Distribution& dist, const TestFunction& psi);

/// CSV with header epsilon,value,err.
std::string to_csv(const std::vector<PairingResult>& results);

}  // namespace gflab
