#include "gflab/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gflab/errors.hpp"
#include "gflab/rational_poly.hpp"
#include "gflab/special_functions.hpp"

namespace gflab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNearFieldFactor = 1.25;
constexpr int kFarFieldNodes = 64;
constexpr double kJacobiTolerance = 1e-10;

double factorial_double(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

std::string format_number(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

// int_{-l}^{l} (f(v) - f(w)) / (v - w) dv where f' = phi^(r). The divided
// difference is written as int_0^1 f'(w + t (v - w)) dt, so nothing cancels;
// both integrals are Gauss-Legendre exact for the polynomial integrands.
double divided_integral(const Mollifier& m, int r, double w, int n) {
  const double l = m.l();
  auto q = [&](double v) {
    auto inner = [&](double t) { return m.eval_polynomial(r, w + t * (v - w)); };
    return integrate_gl(inner, 0.0, 1.0, n);
  };
  if (w > -l && w < l) {
    return integrate_gl(q, -l, w, n) + integrate_gl(q, w, l, n);
  }
  return integrate_gl(q, -l, l, n);
}

}  // namespace

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::DeltaP: return "DeltaP";
    case RepKind::NuPlus: return "NuPlus";
    case RepKind::NuMinus: return "NuMinus";
    case RepKind::XPlusA: return "XPlusA";
    case RepKind::XMinusA: return "XMinusA";
    case RepKind::LogAbs: return "LogAbs";
    case RepKind::XNegPower: return "XNegPower";
  }
  return "?";
}

int default_reduction_order(double a, int needed) {
  const double top = std::max({a + 1.0, -a - 1.0, static_cast<double>(needed)});
  int r = static_cast<int>(std::ceil(top - 1e-12)) + 1;
  r = std::max(r, 0);
  while (a + r < 1.0) {
    ++r;
  }
  return r;
}

void validate_nu_params(const NuParams& params) {
  if (!std::isfinite(params.a)) {
    throw ConfigError("nu: exponent must be finite");
  }
  if (params.a < 0.0 && near_integer(params.a)) {
    throw ConfigError("nu: exponent " + format_number(params.a) + " is a negative integer");
  }
  if (params.r < 0) {
    throw ConfigError("nu: reduction order must be non-negative");
  }
  if (params.a + params.r < 1.0) {
    throw ConfigError("nu: need a + r >= 1, got a = " + format_number(params.a) +
                      ", r = " + std::to_string(params.r));
  }
}

RepNode::RepNode(RepKind kind, double a, int order, MollifierPtr mollifier)
    : kind_(kind), a_(a), order_(order), mollifier_(std::move(mollifier)) {
  if (!mollifier_) {
    throw ConfigError("representative: missing mollifier");
  }
  const double l = mollifier_->l();
  const int s = mollifier_->s();
  support_lo_ = -kInf;
  support_hi_ = kInf;
  divided_nodes_ = std::max(12, (mollifier_->poly().degree() + 2) / 2);
  switch (kind_) {
    case RepKind::DeltaP:
      if (order_ < 0 || order_ > s - 1) {
        throw ConfigError("embed_delta: order " + std::to_string(order_) + " needs s >= " +
                          std::to_string(order_ + 1));
      }
      sigma_ = -order_ - 1.0;
      support_lo_ = -l;
      support_hi_ = l;
      break;
    case RepKind::NuPlus:
    case RepKind::NuMinus:
    case RepKind::XPlusA:
    case RepKind::XMinusA: {
      validate_nu_params({a_, order_});
      if (order_ > s - 1) {
        throw ConfigError("embed_nu: reduction order " + std::to_string(order_) +
                          " needs s >= " + std::to_string(order_ + 1));
      }
      sigma_ = a_;
      const bool plus = kind_ == RepKind::NuPlus || kind_ == RepKind::XPlusA;
      if (plus) {
        support_hi_ = l;
      } else {
        support_lo_ = -l;
      }
      if (kind_ == RepKind::XPlusA || kind_ == RepKind::XMinusA) {
        scale_ = gamma(a_ + 1.0);
      }
      const int degree = std::max(0, mollifier_->derivative_poly(order_).degree());
      const int n_lo = std::max(20, (degree + 2) / 2);
      const double exponent = a_ + order_;
      jacobi_lo_ = plus ? gauss_jacobi(n_lo, 0.0, exponent) : gauss_jacobi(n_lo, exponent, 0.0);
      jacobi_hi_ =
          plus ? gauss_jacobi(2 * n_lo, 0.0, exponent) : gauss_jacobi(2 * n_lo, exponent, 0.0);
      legendre_n_ = 2 * n_lo;
      break;
    }
    case RepKind::LogAbs:
      sigma_ = 0.0;
      break;
    case RepKind::XNegPower:
      if (order_ < 1 || order_ > s - 1) {
        throw ConfigError("embed_x_neg_power: p = " + std::to_string(order_) +
                          " needs 1 <= p <= s - 1");
      }
      sigma_ = -static_cast<double>(order_);
      break;
  }
}

double RepNode::jacobi_integral(double lo, double hi, bool weight_at_lo) const {
  const double exponent = a_ + order_;
  const Mollifier& m = *mollifier_;
  const double l = m.l();
  auto apply = [&](const GaussRule& rule, double a, double b, double& abs_sum) {
    const double half = 0.5 * (b - a);
    // Distances to the support ends, formed without cancellation.
    const double left = a + l;
    const double right = l - b;
    double sum = 0.0;
    abs_sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double u = a + half * (1.0 + rule.nodes[i]);
      const double dl = left + half * (1.0 + rule.nodes[i]);
      const double dr = right + half * (1.0 - rule.nodes[i]);
      const double term = rule.weights[i] * m.eval_with_distances(order_, u, dl, dr);
      sum += term;
      abs_sum += std::abs(term);
    }
    return std::pow(half, exponent + 1.0) * sum;
  };
  double abs_hi = 0.0;
  double abs_lo = 0.0;
  const double fine = apply(jacobi_hi_, lo, hi, abs_hi);
  const double coarse = apply(jacobi_lo_, lo, hi, abs_lo);
  const double scale = std::pow(0.5 * (hi - lo), exponent + 1.0) * abs_hi;
  if (std::abs(fine - coarse) <= kJacobiTolerance * scale) {
    return fine;
  }
  // One bisection: weighted half by Jacobi, the other by Legendre.
  const double mid = 0.5 * (lo + hi);
  const double singular_end = weight_at_lo ? lo : hi;
  auto smooth = [&](double u) {
    return std::pow(std::abs(u - singular_end), exponent) * m.eval_derivative(order_, u);
  };
  double abs_unused = 0.0;
  double part_fine;
  double part_coarse;
  double smooth_fine;
  double smooth_coarse;
  if (weight_at_lo) {
    part_fine = apply(jacobi_hi_, lo, mid, abs_unused);
    part_coarse = apply(jacobi_lo_, lo, mid, abs_unused);
    smooth_fine = integrate_gl(smooth, mid, hi, legendre_n_);
    smooth_coarse = integrate_gl(smooth, mid, hi, legendre_n_ / 2);
  } else {
    part_fine = apply(jacobi_hi_, mid, hi, abs_unused);
    part_coarse = apply(jacobi_lo_, mid, hi, abs_unused);
    smooth_fine = integrate_gl(smooth, lo, mid, legendre_n_);
    smooth_coarse = integrate_gl(smooth, lo, mid, legendre_n_ / 2);
  }
  const double refined = part_fine + smooth_fine;
  if (std::abs(refined - (part_coarse + smooth_coarse)) <= kJacobiTolerance * scale) {
    return refined;
  }
  std::ostringstream msg;
  msg << "nu quadrature did not converge on [" << lo << ", " << hi << "]";
  throw QuadratureError(msg.str());
}

double RepNode::nu_plus_profile(double w) const {
  const Mollifier& m = *mollifier_;
  const double l = m.l();
  if (w >= l) {
    return 0.0;
  }
  if (w >= -l) {
    // Weight (u - w)^(a+r) sits at the lower end u = w.
    const double sign = order_ % 2 == 0 ? 1.0 : -1.0;
    return sign * jacobi_integral(w, l, true) / gamma(a_ + order_ + 1.0);
  }
  // Far field: the unreduced form has no cancellation.
  auto f = [&](double u) { return std::pow(u - w, a_) * m.eval_derivative(0, u); };
  return integrate_graded(f, -l, l, -l - w, true) / gamma(a_ + 1.0);
}

double RepNode::nu_minus_profile(double w) const {
  const Mollifier& m = *mollifier_;
  const double l = m.l();
  if (w <= -l) {
    return 0.0;
  }
  if (w <= l) {
    return jacobi_integral(-l, w, false) / gamma(a_ + order_ + 1.0);
  }
  auto f = [&](double v) { return std::pow(w - v, a_) * m.eval_derivative(0, v); };
  return integrate_graded(f, -l, l, w - l, false) / gamma(a_ + 1.0);
}

double RepNode::neg_power_profile(double w) const {
  const Mollifier& m = *mollifier_;
  const double l = m.l();
  const int p = order_;
  double integral;
  if (std::abs(w) < kNearFieldFactor * l) {
    const double smooth = divided_integral(m, p, w, divided_nodes_);
    const double fw = m.eval_polynomial(p - 1, w);
    double log_term = 0.0;
    if (w != l && w != -l && fw != 0.0) {
      log_term = fw * std::log(std::abs((l - w) / (l + w)));
    }
    integral = smooth + log_term;
  } else {
    auto f = [&](double v) { return m.eval_polynomial(p - 1, v) / (v - w); };
    integral = integrate_gl(f, -l, l, kFarFieldNodes);
  }
  return integral / factorial_double(p - 1);
}

double RepNode::log_profile(double w) const {
  const Mollifier& m = *mollifier_;
  const double l = m.l();
  if (std::abs(w) < kNearFieldFactor * l) {
    const double smooth = divided_integral(m, 0, w, divided_nodes_);
    const double big_phi_w = m.eval_polynomial(-1, w);
    double result = -smooth;
    if (w != l) {
      result += std::log(std::abs(l - w)) * (1.0 - big_phi_w);
    }
    if (w != -l) {
      result += std::log(std::abs(l + w)) * big_phi_w;
    }
    return result;
  }
  auto f = [&](double v) { return std::log(std::abs(v - w)) * m.eval_polynomial(0, v); };
  return integrate_gl(f, -l, l, kFarFieldNodes);
}

double RepNode::profile(double w) const {
  switch (kind_) {
    case RepKind::DeltaP: {
      const double sign = order_ % 2 == 0 ? 1.0 : -1.0;
      return sign * mollifier_->eval_derivative(order_, w);
    }
    case RepKind::NuPlus:
    case RepKind::XPlusA:
      return scale_ * nu_plus_profile(w);
    case RepKind::NuMinus:
    case RepKind::XMinusA:
      return scale_ * nu_minus_profile(w);
    case RepKind::LogAbs:
      return log_profile(w);
    case RepKind::XNegPower:
      return neg_power_profile(w);
  }
  return 0.0;
}

double RepNode::value(double eps, double x) const {
  if (!(eps > 0.0)) {
    throw DomainError("representative: eps must be positive");
  }
  const double w = -x / eps;
  if (kind_ == RepKind::LogAbs) {
    return std::log(eps) + profile(w);
  }
  return std::pow(eps, sigma_) * profile(w);
}

std::string RepNode::label() const {
  switch (kind_) {
    case RepKind::DeltaP:
      return order_ == 0 ? "delta" : "delta^(" + std::to_string(order_) + ")";
    case RepKind::NuPlus:
      return "nu_+^" + format_number(a_);
    case RepKind::NuMinus:
      return "nu_-^" + format_number(a_);
    case RepKind::XPlusA:
      return "x_+^" + format_number(a_);
    case RepKind::XMinusA:
      return "x_-^" + format_number(a_);
    case RepKind::LogAbs:
      return "ln|x|";
    case RepKind::XNegPower:
      return "x^-" + std::to_string(order_);
  }
  return "?";
}

double ProductTerm::sigma() const {
  double s = 0.0;
  for (const auto& f : factors) {
    s += f->sigma();
  }
  return s;
}

bool ProductTerm::homogeneous() const {
  return std::none_of(factors.begin(), factors.end(),
                      [](const RepNodePtr& f) { return f->log_coefficient() != 0.0; });
}

double ProductTerm::support_lo() const {
  double lo = -kInf;
  for (const auto& f : factors) {
    lo = std::max(lo, f->support_lo());
  }
  return lo;
}

double ProductTerm::support_hi() const {
  double hi = kInf;
  for (const auto& f : factors) {
    hi = std::min(hi, f->support_hi());
  }
  return hi;
}

double ProductTerm::value(double eps, double x) const {
  double v = coefficient;
  for (const auto& f : factors) {
    v *= f->value(eps, x);
  }
  return v;
}

std::string ProductTerm::label() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) {
      out += "*";
    }
    out += factors[i]->label();
  }
  return out.empty() ? "1" : out;
}

GeneralizedFunctionRep::GeneralizedFunctionRep(MollifierPtr mollifier,
                                               std::vector<ProductTerm> terms)
    : mollifier_(std::move(mollifier)), terms_(std::move(terms)) {}

GeneralizedFunctionRep GeneralizedFunctionRep::from_node(RepNodePtr node) {
  MollifierPtr m = node->mollifier();
  return GeneralizedFunctionRep(std::move(m), {ProductTerm{1.0, {std::move(node)}}});
}

GeneralizedFunctionRep GeneralizedFunctionRep::zero(MollifierPtr mollifier) {
  return GeneralizedFunctionRep(std::move(mollifier), {});
}

double GeneralizedFunctionRep::value(double eps, double x) const {
  double v = 0.0;
  for (const auto& t : terms_) {
    v += t.value(eps, x);
  }
  return v;
}

std::string GeneralizedFunctionRep::label() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) {
      out += " + ";
    }
    out += "(" + format_number(terms_[i].coefficient) + ")*" + terms_[i].label();
  }
  return out;
}

namespace {

MollifierPtr common_mollifier(const MollifierPtr& a, const MollifierPtr& b) {
  if (!a) {
    return b;
  }
  if (!b || a == b) {
    return a;
  }
  if (a->l_exact() == b->l_exact() && a->s() == b->s() && a->poly() == b->poly()) {
    return a;
  }
  throw ConfigError("representatives built from different mollifiers cannot be combined");
}

}  // namespace

GeneralizedFunctionRep GeneralizedFunctionRep::operator+(const GeneralizedFunctionRep& other) const {
  MollifierPtr m = common_mollifier(mollifier_, other.mollifier_);
  std::vector<ProductTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return GeneralizedFunctionRep(std::move(m), std::move(terms));
}

GeneralizedFunctionRep GeneralizedFunctionRep::operator-(const GeneralizedFunctionRep& other) const {
  return *this + other * -1.0;
}

GeneralizedFunctionRep GeneralizedFunctionRep::operator*(double scalar) const {
  std::vector<ProductTerm> terms = terms_;
  for (auto& t : terms) {
    t.coefficient *= scalar;
  }
  return GeneralizedFunctionRep(mollifier_, std::move(terms));
}

GeneralizedFunctionRep multiply(const GeneralizedFunctionRep& f, const GeneralizedFunctionRep& g) {
  MollifierPtr m = common_mollifier(f.mollifier(), g.mollifier());
  std::vector<ProductTerm> terms;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      ProductTerm t;
      t.coefficient = a.coefficient * b.coefficient;
      t.factors = a.factors;
      t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
      terms.push_back(std::move(t));
    }
  }
  return GeneralizedFunctionRep(std::move(m), std::move(terms));
}

GeneralizedFunctionRep embed_delta(int p, MollifierPtr m) {
  return GeneralizedFunctionRep::from_node(
      std::make_shared<const RepNode>(RepKind::DeltaP, 0.0, p, std::move(m)));
}

GeneralizedFunctionRep embed_nu(Sign sign, NuParams params, MollifierPtr m) {
  const RepKind kind = sign == Sign::Plus ? RepKind::NuPlus : RepKind::NuMinus;
  return GeneralizedFunctionRep::from_node(
      std::make_shared<const RepNode>(kind, params.a, params.r, std::move(m)));
}

GeneralizedFunctionRep embed_x_pm_a(Sign sign, NuParams params, MollifierPtr m) {
  const RepKind kind = sign == Sign::Plus ? RepKind::XPlusA : RepKind::XMinusA;
  return GeneralizedFunctionRep::from_node(
      std::make_shared<const RepNode>(kind, params.a, params.r, std::move(m)));
}

GeneralizedFunctionRep embed_log_abs(MollifierPtr m) {
  return GeneralizedFunctionRep::from_node(
      std::make_shared<const RepNode>(RepKind::LogAbs, 0.0, 0, std::move(m)));
}

GeneralizedFunctionRep embed_x_neg_power(int p, MollifierPtr m) {
  return GeneralizedFunctionRep::from_node(
      std::make_shared<const RepNode>(RepKind::XNegPower, 0.0, p, std::move(m)));
}

}  // namespace gflab
