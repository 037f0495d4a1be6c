#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gflab/claims.hpp"
#include "gflab/fit.hpp"
#include "gflab/functionals.hpp"
#include "gflab/mollifier.hpp"
#include "gflab/test_function.hpp"

namespace gflab {

struct EpsilonGrid {
  double eps0 = 0.1;
  double ratio = 0.6;
  int steps = 12;

  /// ConfigError unless eps0 > 0, 0 < ratio < 1, steps >= 6 and the smallest
  /// point stays above 1e-8.
  void validate() const;
  /// eps0 * ratio^k for k = 0..steps.
  std::vector<double> points() const;
};

/// F(eps_k) for the whole grid.
std::vector<PairingResult> sweep(const GeneralizedFunctionRep& combo, const TestFunction& psi,
                                 const EpsilonGrid& grid);

struct FitRecord {
  std::string mollifier;
  std::string psi;
  AsymptoticFit fit;
  /// |c0 with one extra positive power - c0|.
  double basis_shift = 0.0;
  double divergent = 0.0;
  double divergent_scale = 0.0;
  bool divergent_pass = true;
  bool pairing_flagged = false;
};

struct C0Check {
  std::string mollifier;
  std::string psi;
  double expected = 0.0;
  double got = 0.0;
  double rel_err = 0.0;
  bool pass = true;
};

struct SpreadCheck {
  std::string psi;
  double spread = 0.0;
  bool pass = true;
};

struct ClaimReport {
  Claim claim;
  double tol = 1e-3;
  EpsilonGrid grid;
  std::vector<std::string> mollifiers;
  std::vector<std::string> psis;
  std::vector<FitRecord> fits;
  std::vector<C0Check> c0_checks;
  std::vector<SpreadCheck> spread_checks;
  double divergent_max = 0.0;
  std::vector<std::string> diagnostics;
  bool verdict = false;

  nlohmann::ordered_json to_json() const;
};

/// Sweeps, fits and checks one claim over every (mollifier, psi) pair:
///  (i)   negative-power coefficients <= tol * the largest single-term
///        divergent coefficient,
///  (ii)  c0 = rhs coefficient * action(rhs, psi) within tol relative,
///  (iii) c0 spread across mollifiers <= tol relative.
/// The verdict passes only if every check passes. Needs at least two
/// mollifiers and two test functions.
ClaimReport verify_claim(const Claim& claim, const std::vector<MollifierPtr>& mollifiers,
                         const std::vector<TestFunction>& psis, const EpsilonGrid& grid,
                         double tol);

struct ProofStepReport {
  int p = 0;
  double a = 0.0;
  struct SEntry {
    int n = 0;
    double s1 = 0.0;
    double s2 = 0.0;
    double combined = 0.0;
    double scale = 0.0;
    bool exact_zero = true;
    bool pass = true;
  };
  std::vector<SEntry> s_checks;
  double r1 = 0.0;
  double r2 = 0.0;
  double r_sum = 0.0;
  double r_expected = 0.0;
  bool r_pass = true;
  bool pass = true;

  nlohmann::ordered_json to_json() const;
};

/// Checks (-1)^p S_1(n) + S_2(n) = 0 for n = 0..p, with
///   S_1(n) = sum_t C(-a-1, t) I_{n,t},   S_2(n) = sum_t C(a+p, t) I_{n,t},
///   I_{n,t} = int u^(n-t)/(n-t)! phi(u) phi^(p-t-1)(u) du,
/// t = 0..n and the term n = t = p left out. I_{n,t} is exact; the sums are
/// checked numerically (1e-9 of the absolute sum) and as exact polynomials
/// in a. Also checks (-1)^p R_1 + R_2 = C(a+p,p) <delta^(p), psi>.
/// ConfigError if phi lacks the derivative p - 1.
ProofStepReport proof_step_check(int p, double a, const Mollifier& m, const TestFunction& psi);

}  // namespace gflab
