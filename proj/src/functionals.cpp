#include "gflab/functionals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "gflab/errors.hpp"
#include "gflab/parallel.hpp"
#include "gflab/quadrature.hpp"
#include "gflab/special_functions.hpp"

namespace gflab {

namespace {

constexpr int kPanelNodes = 20;
constexpr int kGradingLevels = 10;
constexpr double kFlagTolerance = 1e-8;
constexpr double kFailTolerance = 1e-6;

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Panel breakpoints in w for the interval [lo, hi].
std::vector<double> breakpoints(double lo, double hi, double l) {
  std::vector<double> points{lo, hi, 0.0, -l, l};
  for (int k = 1; k <= kGradingLevels; ++k) {
    const double inner = l * (1.0 - std::ldexp(1.0, -k));
    const double outer = l * (1.0 + std::ldexp(1.0, -k));
    for (double p : {inner, -inner, outer, -outer}) {
      points.push_back(p);
    }
  }
  const double reach = std::max(std::abs(lo), std::abs(hi));
  for (double p = 2.0 * l; p < reach; p *= 2.0) {
    points.push_back(p);
    points.push_back(-p);
  }
  std::vector<double> out;
  for (double p : points) {
    if (p >= lo && p <= hi) {
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct NodeSet {
  std::vector<double> w;
  std::vector<double> weight;
};

void append_panel(NodeSet& set, double a, double b) {
  const GaussRule& rule = gauss_legendre(kPanelNodes);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    set.w.push_back(mid + half * rule.nodes[i]);
    set.weight.push_back(half * rule.weights[i]);
  }
}

struct EpsPlan {
  NodeSet coarse;
  NodeSet fine;
  bool empty = true;
};

EpsPlan plan_for(const ProductTerm& term, const TestFunctionView& psi, double eps, double l) {
  EpsPlan plan;
  const double lo = std::max(term.support_lo(), -psi.hi / eps);
  const double hi = std::min(term.support_hi(), -psi.lo / eps);
  if (!(hi > lo)) {
    return plan;
  }
  plan.empty = false;
  const auto points = breakpoints(lo, hi, l);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i];
    const double b = points[i + 1];
    append_panel(plan.coarse, a, b);
    const double mid = 0.5 * (a + b);
    append_panel(plan.fine, a, mid);
    append_panel(plan.fine, mid, b);
  }
  return plan;
}

}  // namespace

TestFunctionView view(const TestFunction& psi) {
  return TestFunctionView{[psi](double x) { return psi(x); }, -psi.support(), psi.support()};
}

std::vector<std::vector<PairingResult>> pair_terms(const GeneralizedFunctionRep& f,
                                                   const TestFunctionView& psi,
                                                   const std::vector<double>& eps) {
  for (double e : eps) {
    if (!(e > 0.0)) {
      throw DomainError("pair: eps must be positive");
    }
  }
  std::vector<std::vector<PairingResult>> out;
  for (const auto& term : f.terms()) {
    const double l = f.mollifier() ? f.mollifier()->l() : 1.0;
    std::vector<EpsPlan> plans;
    std::vector<double> all_w;
    for (double e : eps) {
      plans.push_back(plan_for(term, psi, e, l));
      all_w.insert(all_w.end(), plans.back().coarse.w.begin(), plans.back().coarse.w.end());
      all_w.insert(all_w.end(), plans.back().fine.w.begin(), plans.back().fine.w.end());
    }
    std::sort(all_w.begin(), all_w.end());
    all_w.erase(std::unique(all_w.begin(), all_w.end()), all_w.end());

    // profiles[k][i]: factor k at all_w[i].
    const std::size_t nf = term.factors.size();
    std::vector<std::vector<double>> profiles(nf, std::vector<double>(all_w.size()));
    constexpr std::size_t kChunk = 64;
    const std::size_t chunks = (all_w.size() + kChunk - 1) / kChunk;
    parallel_for(nf * chunks, [&](std::size_t job) {
      const std::size_t k = job / chunks;
      const std::size_t begin = (job % chunks) * kChunk;
      const std::size_t end = std::min(all_w.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        profiles[k][i] = term.factors[k]->profile(all_w[i]);
      }
    });

    std::vector<PairingResult> results;
    for (std::size_t j = 0; j < eps.size(); ++j) {
      const double e = eps[j];
      const double log_eps = std::log(e);
      std::vector<double> eps_pow(nf);
      for (std::size_t k = 0; k < nf; ++k) {
        eps_pow[k] = std::pow(e, term.factors[k]->sigma());
      }
      auto integrate = [&](const NodeSet& set, double* abs_out) {
        double sum = 0.0;
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < set.w.size(); ++i) {
          const std::size_t idx =
              std::lower_bound(all_w.begin(), all_w.end(), set.w[i]) - all_w.begin();
          double v = 1.0;
          for (std::size_t k = 0; k < nf; ++k) {
            v *= eps_pow[k] * profiles[k][idx] + term.factors[k]->log_coefficient() * log_eps;
          }
          const double contribution = set.weight[i] * v * psi.eval(-e * set.w[i]);
          sum += contribution;
          abs_sum += std::abs(contribution);
        }
        if (abs_out != nullptr) {
          *abs_out = std::abs(term.coefficient * e) * abs_sum;
        }
        return term.coefficient * e * sum;
      };
      PairingResult r;
      r.epsilon = e;
      double magnitude = 0.0;
      if (!plans[j].empty) {
        const double coarse = integrate(plans[j].coarse, nullptr);
        r.value = integrate(plans[j].fine, &magnitude);
        r.error = std::abs(r.value - coarse);
      }
      const double scale = std::max(1.0, std::abs(r.value));
      // Cancelling integrands carry roundoff of order 1e-16 * magnitude, so
      // failure is judged against the integrand scale as well.
      if (!std::isfinite(r.value) || r.error > kFailTolerance * std::max(scale, magnitude)) {
        std::ostringstream msg;
        msg << "pairing of " << term.label() << " at eps = " << e
            << " failed: value " << r.value << ", error estimate " << r.error;
        throw QuadratureError(msg.str());
      }
      r.flagged = r.error > kFlagTolerance * scale;
      results.push_back(r);
    }
    out.push_back(std::move(results));
  }
  return out;
}

std::vector<PairingResult> sum_terms(const std::vector<std::vector<PairingResult>>& per_term,
                                     const std::vector<double>& eps) {
  std::vector<PairingResult> total(eps.size());
  for (std::size_t j = 0; j < eps.size(); ++j) {
    total[j].epsilon = eps[j];
    for (const auto& term : per_term) {
      total[j].value += term[j].value;
      total[j].error += term[j].error;
      total[j].flagged = total[j].flagged || term[j].flagged;
    }
  }
  return total;
}

std::vector<PairingResult> pair_sweep(const GeneralizedFunctionRep& f, const TestFunction& psi,
                                      const std::vector<double>& eps) {
  return sum_terms(pair_terms(f, view(psi), eps), eps);
}

PairingResult pair(const GeneralizedFunctionRep& f, const TestFunctionView& psi, double eps) {
  return sum_terms(pair_terms(f, psi, {eps}), {eps}).front();
}

PairingResult pair(const GeneralizedFunctionRep& f, const TestFunction& psi, double eps) {
  return pair(f, view(psi), eps);
}

std::string Distribution::label() const {
  switch (kind) {
    case Kind::DeltaP:
      return order == 0 ? "delta" : "delta^(" + std::to_string(order) + ")";
    case Kind::XNegPower:
      return "x^-" + std::to_string(order);
    case Kind::Nu:
      return std::string(sign == Sign::Plus ? "nu_+^" : "nu_-^") + shortest(a);
    case Kind::Zero:
      return "0";
  }
  return "?";
}

double action(const Distribution& dist, const TestFunction& psi) {
  switch (dist.kind) {
    case Distribution::Kind::Zero:
      return 0.0;
    case Distribution::Kind::DeltaP: {
      const Rational v = psi.derivative_at_zero(dist.order);
      return (dist.order % 2 == 0 ? v : Rational(-v)).get_d();
    }
    case Distribution::Kind::XNegPower: {
      if (dist.order < 1) {
        throw ConfigError("action: x^{-n} needs n >= 1");
      }
      // int_{-L}^{L} ln|x| x^k dx = A_k ln L + B_k, exact A_k, B_k for even k.
      const RationalPoly d = psi.derivative_poly(dist.order);
      const Rational& big_l = psi.support_exact();
      Rational a_sum(0);
      Rational b_sum(0);
      Rational lp = big_l;
      for (std::size_t k = 0; k < d.coefficients().size(); ++k) {
        if (k % 2 == 0) {
          const Rational kk(static_cast<long>(k + 1));
          a_sum += d.coefficients()[k] * 2 * lp / kk;
          b_sum -= d.coefficients()[k] * 2 * lp / (kk * kk);
        }
        lp *= big_l;
      }
      const double integral = a_sum.get_d() * std::log(big_l.get_d()) + b_sum.get_d();
      return -integral / factorial(static_cast<unsigned>(dist.order - 1)).get_d();
    }
    case Distribution::Kind::Nu: {
      const double a = dist.a;
      if (a < 0.0 && near_integer(a)) {
        throw PoleError("action: nu exponent is a negative integer");
      }
      const int r = a > -1.0 ? 0 : static_cast<int>(std::floor(-1.0 - a)) + 1;
      const double exponent = a + r;
      const RationalPoly d = psi.derivative_poly(r);
      const std::vector<double> c = d.to_double_coefficients();
      const double big_l = psi.support();
      const int n = std::max(20, static_cast<int>(c.size()) / 2 + 2);
      const GaussRule rule = gauss_jacobi(n, 0.0, exponent);
      const double mirror = dist.sign == Sign::Plus ? 1.0 : -1.0;
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = 0.5 * big_l * (1.0 + rule.nodes[i]);
        sum += rule.weights[i] * horner(c, mirror * x);
      }
      const double integral = std::pow(0.5 * big_l, exponent + 1.0) * sum;
      const double sign = (dist.sign == Sign::Plus && r % 2 == 1) ? -1.0 : 1.0;
      return sign * integral / gamma(exponent + 1.0);
    }
  }
  return 0.0;
}

std::string to_csv(const std::vector<PairingResult>& results) {
  std::string out = "epsilon,value,err\n";
  for (const auto& r : results) {
    out += shortest(r.epsilon) + "," + shortest(r.value) + "," + shortest(r.error) + "\n";
  }
  return out;
}

}  // namespace gflab
