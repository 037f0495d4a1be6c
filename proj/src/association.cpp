#include "gflab/association.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gflab/errors.hpp"
#include "gflab/identities.hpp"
#include "gflab/special_functions.hpp"

namespace gflab {

namespace {

constexpr double kMinEpsilon = 1e-8;
constexpr double kRelativeFloor = 1e-2;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

}  // namespace

void EpsilonGrid::validate() const {
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) {
    throw ConfigError("grid: eps0 must be positive");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ConfigError("grid: ratio must lie in (0, 1)");
  }
  if (steps < 6) {
    throw ConfigError("grid: steps must be at least 6");
  }
  if (eps0 * std::pow(ratio, steps) < kMinEpsilon) {
    throw ConfigError("grid: smallest eps " + fmt(eps0 * std::pow(ratio, steps)) +
                      " is below 1e-8");
  }
}

std::vector<double> EpsilonGrid::points() const {
  validate();
  std::vector<double> out;
  for (int k = 0; k <= steps; ++k) {
    out.push_back(eps0 * std::pow(ratio, k));
  }
  return out;
}

std::vector<PairingResult> sweep(const GeneralizedFunctionRep& combo, const TestFunction& psi,
                                 const EpsilonGrid& grid) {
  return pair_sweep(combo, psi, grid.points());
}

ClaimReport verify_claim(const Claim& claim, const std::vector<MollifierPtr>& mollifiers,
                         const std::vector<TestFunction>& psis, const EpsilonGrid& grid,
                         double tol) {
  if (mollifiers.size() < 2) {
    throw ConfigError("verify_claim: need at least two mollifiers");
  }
  if (psis.size() < 2) {
    throw ConfigError("verify_claim: need at least two test functions");
  }
  if (!(tol > 0.0)) {
    throw ConfigError("verify_claim: tol must be positive");
  }
  const std::vector<double> eps = grid.points();
  const int s_needed = claim.required_smoothness();
  for (const auto& m : mollifiers) {
    if (m->s() < s_needed) {
      throw ConfigError("verify_claim: " + claim.id_string() + " needs mollifier smoothness s >= " +
                        std::to_string(s_needed) + ", got " + std::to_string(m->s()));
    }
  }

  ClaimReport report;
  report.claim = claim;
  report.tol = tol;
  report.grid = grid;
  for (const auto& m : mollifiers) {
    report.mollifiers.push_back(m->descriptor());
  }
  for (const auto& psi : psis) {
    report.psis.push_back(psi.name());
  }

  std::vector<double> expected(psis.size());
  double expected_scale = 0.0;
  for (std::size_t j = 0; j < psis.size(); ++j) {
    expected[j] = claim.rhs_coefficient * action(claim.rhs, psis[j]);
    expected_scale = std::max(expected_scale, std::abs(expected[j]));
  }

  std::vector<double> extended = claim.exponents;
  extended.push_back(claim.exponents.back() + 1.0);

  // c0[i][j]: mollifier i, psi j.
  std::vector<std::vector<double>> c0(mollifiers.size(), std::vector<double>(psis.size()));
  double term_scale = 0.0;
  double divergent_scale = 0.0;
  for (std::size_t i = 0; i < mollifiers.size(); ++i) {
    const GeneralizedFunctionRep combo = claim.build_lhs(mollifiers[i]);
    for (std::size_t j = 0; j < psis.size(); ++j) {
      const auto per_term = pair_terms(combo, view(psis[j]), eps);
      const auto total = sum_terms(per_term, eps);
      std::vector<double> values;
      std::vector<double> magnitude(eps.size(), 0.0);
      bool flagged = false;
      for (const auto& r : total) {
        values.push_back(r.value);
        flagged = flagged || r.flagged;
      }
      for (const auto& term : per_term) {
        for (std::size_t k = 0; k < term.size(); ++k) {
          magnitude[k] += std::abs(term[k].value);
        }
      }
      FitRecord rec;
      rec.mollifier = mollifiers[i]->descriptor();
      rec.psi = psis[j].name();
      rec.fit = fit_expansion(eps, values, claim.exponents, magnitude);
      rec.pairing_flagged = flagged;
      const AsymptoticFit wider = fit_expansion(eps, values, extended, magnitude);
      rec.basis_shift = std::abs(wider.coefficient(0.0) - rec.fit.coefficient(0.0));
      for (const auto& term : per_term) {
        std::vector<double> tv;
        for (const auto& r : term) {
          tv.push_back(r.value);
        }
        const AsymptoticFit tf = fit_expansion(eps, tv, claim.exponents);
        rec.divergent_scale = std::max(rec.divergent_scale, tf.max_divergent());
        for (double c : tf.coefficients) {
          term_scale = std::max(term_scale, std::abs(c));
        }
      }
      rec.divergent = rec.fit.max_divergent();
      divergent_scale = std::max(divergent_scale, rec.divergent_scale);
      report.divergent_max = std::max(report.divergent_max, rec.divergent);
      c0[i][j] = rec.fit.coefficient(0.0);
      if (!rec.fit.reliable) {
        report.diagnostics.push_back("fit residual " + fmt(rec.fit.residual) + " above 1e-6 for " +
                                     rec.mollifier + " / " + rec.psi);
      }
      if (flagged) {
        report.diagnostics.push_back("pairing error estimate above 1e-8 for " + rec.mollifier +
                                     " / " + rec.psi);
      }
      report.fits.push_back(std::move(rec));
    }
  }

  // Divergent parts are judged against the largest single-term divergent
  // coefficient of the claim, since for some psi a term's own vanishes.
  for (auto& rec : report.fits) {
    rec.divergent_scale = divergent_scale;
    rec.divergent_pass = rec.divergent <= tol * divergent_scale;
    if (!rec.divergent_pass) {
      report.diagnostics.push_back("divergent coefficient " + fmt(rec.divergent) +
                                   " exceeds tol * " + fmt(divergent_scale) + " for " +
                                   rec.mollifier + " / " + rec.psi);
    }
  }

  const double c0_scale = expected_scale > 0.0 ? expected_scale : term_scale;
  auto denominator = [&](double e) {
    if (std::abs(e) >= kRelativeFloor * c0_scale && std::abs(e) > 0.0) {
      return std::abs(e);
    }
    return c0_scale > 0.0 ? c0_scale : 1.0;
  };
  for (std::size_t i = 0; i < mollifiers.size(); ++i) {
    for (std::size_t j = 0; j < psis.size(); ++j) {
      C0Check check;
      check.mollifier = mollifiers[i]->descriptor();
      check.psi = psis[j].name();
      check.expected = expected[j];
      check.got = c0[i][j];
      check.rel_err = std::abs(check.got - check.expected) / denominator(expected[j]);
      check.pass = check.rel_err <= tol;
      if (!check.pass) {
        report.diagnostics.push_back("c0 mismatch for " + check.mollifier + " / " + check.psi +
                                     ": expected " + fmt(check.expected) + ", got " +
                                     fmt(check.got));
      }
      report.c0_checks.push_back(check);
    }
  }
  for (std::size_t j = 0; j < psis.size(); ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < mollifiers.size(); ++i) {
      lo = std::min(lo, c0[i][j]);
      hi = std::max(hi, c0[i][j]);
    }
    SpreadCheck s;
    s.psi = psis[j].name();
    s.spread = (hi - lo) / denominator(expected[j]);
    s.pass = s.spread <= tol;
    report.spread_checks.push_back(s);
  }

  report.verdict =
      std::all_of(report.fits.begin(), report.fits.end(),
                  [](const FitRecord& f) { return f.divergent_pass; }) &&
      std::all_of(report.c0_checks.begin(), report.c0_checks.end(),
                  [](const C0Check& c) { return c.pass; }) &&
      std::all_of(report.spread_checks.begin(), report.spread_checks.end(),
                  [](const SpreadCheck& s) { return s.pass; });
  return report;
}

nlohmann::ordered_json ClaimReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = to_string(claim.id);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& n : claim_parameter_names(claim.id)) {
    if (n == "a") params["a"] = claim.params.a;
    if (n == "b") params["b"] = claim.params.b;
    if (n == "p") params["p"] = claim.params.p;
    if (n == "q") params["q"] = claim.params.q;
  }
  j["params"] = params;
  j["statement"] = claim.statement;
  j["tol"] = tol;
  j["grid"] = {{"eps0", grid.eps0}, {"ratio", grid.ratio}, {"steps", grid.steps}};
  j["mollifiers"] = mollifiers;
  j["psis"] = psis;
  auto fit_array = nlohmann::ordered_json::array();
  for (const auto& f : fits) {
    nlohmann::ordered_json e;
    e["mollifier"] = f.mollifier;
    e["psi"] = f.psi;
    e["exponents"] = f.fit.exponents;
    e["coeffs"] = f.fit.coefficients;
    e["residual"] = f.fit.residual;
    e["condition"] = f.fit.condition;
    e["reliable"] = f.fit.reliable;
    e["basis_shift"] = f.basis_shift;
    e["divergent"] = f.divergent;
    e["divergent_scale"] = f.divergent_scale;
    e["divergent_pass"] = f.divergent_pass;
    fit_array.push_back(std::move(e));
  }
  j["fits"] = fit_array;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : c0_checks) {
    checks.push_back({{"mollifier", c.mollifier},
                      {"psi", c.psi},
                      {"expected", c.expected},
                      {"got", c.got},
                      {"rel_err", c.rel_err},
                      {"pass", c.pass}});
  }
  j["c0_checks"] = checks;
  auto spreads = nlohmann::ordered_json::array();
  for (const auto& s : spread_checks) {
    spreads.push_back({{"psi", s.psi}, {"spread", s.spread}, {"pass", s.pass}});
  }
  j["spread_checks"] = spreads;
  j["divergent_max"] = divergent_max;
  j["diagnostics"] = diagnostics;
  j["verdict"] = verdict ? "pass" : "fail";
  return j;
}

ProofStepReport proof_step_check(int p, double a, const Mollifier& m, const TestFunction& psi) {
  if (p < 1) {
    throw ConfigError("proof_step_check: p must be at least 1");
  }
  if (near_integer(a)) {
    throw ValidityError("proof_step_check: a must not be an integer");
  }
  if (p - 1 > m.s() - 1) {
    throw ConfigError("proof_step_check: p - 1 exceeds the mollifier smoothness");
  }
  ProofStepReport report;
  report.p = p;
  report.a = a;
  const double sign_p = p % 2 == 0 ? 1.0 : -1.0;
  const Rational& l = m.l_exact();
  for (int n = 0; n <= p; ++n) {
    ProofStepReport::SEntry entry;
    entry.n = n;
    RationalPoly exact;
    for (int t = 0; t <= n; ++t) {
      if (n == p && t == p) {
        continue;
      }
      const int k = n - t;
      const RationalPoly weight = RationalPoly::monomial(static_cast<unsigned>(k),
                                                         1 / factorial(static_cast<unsigned>(k)));
      const Rational integral = (weight * m.poly() * m.derivative_poly(p - t - 1)).integrate(-l, l);
      const double i_nt = integral.get_d();
      const double b1 = binomial_real(-a - 1.0, t);
      const double b2 = binomial_real(a + p, t);
      entry.s1 += b1 * i_nt;
      entry.s2 += b2 * i_nt;
      entry.scale += (std::abs(b1) + std::abs(b2)) * std::abs(i_nt);
      exact += (binom_poly(Rational(-1), Rational(-1), t) * Rational(p % 2 == 0 ? 1 : -1) +
                binom_poly(Rational(p), t)) *
               integral;
    }
    entry.combined = sign_p * entry.s1 + entry.s2;
    entry.exact_zero = exact.is_zero();
    entry.pass = entry.exact_zero && std::abs(entry.combined) <= 1e-9 * entry.scale;
    report.s_checks.push_back(entry);
  }
  const double psi_p = psi.derivative_at_zero(p).get_d();
  report.r1 = 0.5 * sign_p * psi_p * binomial_real(-a - 1.0, p);
  report.r2 = 0.5 * sign_p * psi_p * binomial_real(a + p, p);
  report.r_sum = sign_p * report.r1 + report.r2;
  report.r_expected = binomial_real(a + p, p) * action(Distribution::delta(p), psi);
  report.r_pass = std::abs(report.r_sum - report.r_expected) <=
                  1e-12 * std::max(1.0, std::abs(report.r_expected));
  report.pass = report.r_pass && std::all_of(report.s_checks.begin(), report.s_checks.end(),
                                             [](const auto& e) { return e.pass; });
  return report;
}

nlohmann::ordered_json ProofStepReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["a"] = a;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : s_checks) {
    arr.push_back({{"n", e.n},
                   {"s1", e.s1},
                   {"s2", e.s2},
                   {"combined", e.combined},
                   {"scale", e.scale},
                   {"exact_zero", e.exact_zero},
                   {"pass", e.pass}});
  }
  j["s_checks"] = arr;
  j["r1"] = r1;
  j["r2"] = r2;
  j["r_sum"] = r_sum;
  j["r_expected"] = r_expected;
  j["r_pass"] = r_pass;
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

}  // namespace gflab
