#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gflab/embeddings.hpp"
#include "gflab/functionals.hpp"

namespace gflab {

enum class ClaimId { MIK, THM1, THM2, THM2X, THM3, COR2, COR3, THM4 };

struct ClaimParams {
  double a = 0.0;
  double b = 0.0;
  int p = 1;
  int q = 1;
};

/// One product on the left-hand side, built for a given mollifier.
struct LhsTerm {
  double coefficient = 1.0;
  std::string label;
  std::function<GeneralizedFunctionRep(const MollifierPtr&)> build;
  /// Largest mollifier derivative order the product evaluates.
  int max_order = 0;
};

struct Claim {
  ClaimId id = ClaimId::MIK;
  ClaimParams params;
  std::string statement;
  std::vector<LhsTerm> lhs;
  Distribution rhs;
  double rhs_coefficient = 1.0;
  std::vector<double> exponents;
  double default_tol = 1e-3;

  /// Smallest mollifier smoothness that supports every term (r_max + 2).
  int required_smoothness() const;
  /// Sum of coefficient * product for one mollifier.
  GeneralizedFunctionRep build_lhs(const MollifierPtr& m) const;
  std::string id_string() const;
};

std::string to_string(ClaimId id);
/// Accepts mik, thm1, thm2, thm2x, thm3, cor2, cor3, thm4 (any case).
ClaimId parse_claim_id(const std::string& name);
/// The parameters that matter for a claim, e.g. {"a"} or {"p", "q"}.
std::vector<std::string> claim_parameter_names(ClaimId id);

/// Builds a catalog entry. Throws ValidityError outside the claim's domain:
/// a in Z for THM2..THM4, a or b a negative integer or a + b <= -2 for THM1,
/// p or q < 1 for MIK and THM4.
Claim make_claim(ClaimId id, const ClaimParams& params);

/// Every catalog entry with a one-line description.
std::vector<std::pair<std::string, std::string>> claim_catalog();

}  // namespace gflab
