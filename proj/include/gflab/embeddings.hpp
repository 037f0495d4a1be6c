#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gflab/mollifier.hpp"
#include "gflab/quadrature.hpp"

namespace gflab {

enum class RepKind { DeltaP, NuPlus, NuMinus, XPlusA, XMinusA, LogAbs, XNegPower };

std::string to_string(RepKind kind);

enum class Sign { Plus, Minus };

struct NuParams {
  double a = 0.0;
  int r = 1;
};

/// Smallest admissible reduction order: ceil(max{a+1, -a-1, needed}) + 1,
/// raised until a + r >= 1.
int default_reduction_order(double a, int needed = 0);

/// Throws ConfigError unless a is off the negative integers, r >= 0 and a + r >= 1.
void validate_nu_params(const NuParams& params);

/// One embedded distribution. Every kind except LogAbs is homogeneous in the
/// sense value(eps, x) = eps^sigma * profile(-x/eps); LogAbs is
/// ln(eps) + profile(-x/eps).
class RepNode {
 public:
  RepNode(RepKind kind, double a, int order, MollifierPtr mollifier);

  RepKind kind() const { return kind_; }
  double a() const { return a_; }
  /// Derivative order p for DeltaP/XNegPower, reduction order r for the powers.
  int order() const { return order_; }
  const MollifierPtr& mollifier() const { return mollifier_; }

  double sigma() const { return sigma_; }
  /// Coefficient of ln(eps) in the value: 1 for LogAbs, 0 otherwise.
  double log_coefficient() const { return kind_ == RepKind::LogAbs ? 1.0 : 0.0; }
  /// Support in w = -x/eps; infinite ends are +-inf.
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

  /// The eps-independent profile in w.
  double profile(double w) const;
  double value(double eps, double x) const;
  std::string label() const;

 private:
  double nu_plus_profile(double w) const;
  double nu_minus_profile(double w) const;
  double neg_power_profile(double w) const;
  double log_profile(double w) const;
  // Integral of (endpoint distance)^(a+r) phi^(r) over [lo, hi] with the
  // algebraic endpoint at `lo` (toward_lo) or `hi`.
  double jacobi_integral(double lo, double hi, bool weight_at_lo) const;

  RepKind kind_;
  double a_;
  int order_;
  MollifierPtr mollifier_;
  double sigma_ = 0.0;
  double scale_ = 1.0;
  double support_lo_;
  double support_hi_;
  GaussRule jacobi_hi_;
  GaussRule jacobi_lo_;
  int legendre_n_ = 40;
  int divided_nodes_ = 12;
};

using RepNodePtr = std::shared_ptr<const RepNode>;

struct ProductTerm {
  double coefficient = 1.0;
  std::vector<RepNodePtr> factors;

  double sigma() const;
  bool homogeneous() const;
  double support_lo() const;
  double support_hi() const;
  double value(double eps, double x) const;
  std::string label() const;
};

/// A representative f(phi_eps, x): a linear combination of pointwise
/// products of embedded distributions, all built from one mollifier.
class GeneralizedFunctionRep {
 public:
  GeneralizedFunctionRep() = default;
  GeneralizedFunctionRep(MollifierPtr mollifier, std::vector<ProductTerm> terms);
  static GeneralizedFunctionRep from_node(RepNodePtr node);
  static GeneralizedFunctionRep zero(MollifierPtr mollifier = nullptr);

  const MollifierPtr& mollifier() const { return mollifier_; }
  const std::vector<ProductTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double value(double eps, double x) const;
  std::string label() const;

  GeneralizedFunctionRep operator+(const GeneralizedFunctionRep& other) const;
  GeneralizedFunctionRep operator-(const GeneralizedFunctionRep& other) const;
  GeneralizedFunctionRep operator*(double scalar) const;
  friend GeneralizedFunctionRep operator*(double scalar, const GeneralizedFunctionRep& rep) {
    return rep * scalar;
  }

 private:
  MollifierPtr mollifier_;
  std::vector<ProductTerm> terms_;
};

/// delta^(p): value (-1)^p eps^{-p-1} phi^(p)(-x/eps).
GeneralizedFunctionRep embed_delta(int p, MollifierPtr m);
/// nu_+^a or nu_-^a reduced through r derivatives.
GeneralizedFunctionRep embed_nu(Sign sign, NuParams params, MollifierPtr m);
/// Gamma(a+1) times embed_nu.
GeneralizedFunctionRep embed_x_pm_a(Sign sign, NuParams params, MollifierPtr m);
/// int ln|x + eps v| phi(v) dv.
GeneralizedFunctionRep embed_log_abs(MollifierPtr m);
/// x^{-p} as -(eps^{-p}/(p-1)!) int ln|x + eps v| phi^(p)(v) dv.
GeneralizedFunctionRep embed_x_neg_power(int p, MollifierPtr m);

/// Pointwise product; ConfigError if the factors use different mollifiers.
GeneralizedFunctionRep multiply(const GeneralizedFunctionRep& f, const GeneralizedFunctionRep& g);

}  // namespace gflab
