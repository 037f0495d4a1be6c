// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Details for failed checks go to stderr.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gflab/association.hpp"
#include "gflab/claims.hpp"
#include "gflab/cli.hpp"
#include "gflab/errors.hpp"
#include "gflab/fit.hpp"
#include "gflab/identities.hpp"
#include "gflab/quadrature.hpp"
#include "gflab/special_functions.hpp"

using namespace gflab;

namespace {

std::vector<MollifierPtr> families(int count, int s) {
  return mollifier_families(count, 2, std::max(10, s), Rational(1));
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::string info;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double worst_c0(const ClaimReport& r) {
  double w = 0.0;
  for (const auto& c : r.c0_checks) {
    w = std::max(w, c.rel_err);
  }
  return w;
}

void run_claim(Outcome& out, const Claim& claim, int count, double tol) {
  try {
    const ClaimReport r = verify_claim(claim, families(count, claim.required_smoothness()),
                                       default_test_functions(), EpsilonGrid{}, tol);
    std::string why = claim.id_string() + " c0 rel err " + fmt(worst_c0(r));
    for (const auto& d : r.diagnostics) {
      why += "\n    " + d;
    }
    out.require(r.verdict, why);
  } catch (const Error& e) {
    out.require(false, claim.id_string() + ": " + e.what());
  }
}

void report(const std::string& id, const std::string& title, const Outcome& o) {
  std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << std::endl;
  if (!o.info.empty()) {
    std::cout << "     " << o.info << std::endl;
  }
  for (const auto& n : o.notes) {
    std::cerr << "  " << id << ": " << n << "\n";
  }
}

double fit_coefficient(const GeneralizedFunctionRep& f, const TestFunction& psi, double exponent,
                       const std::vector<double>& basis) {
  const EpsilonGrid grid;
  std::vector<double> vals;
  for (const auto& r : sweep(f, psi, grid)) {
    vals.push_back(r.value);
  }
  return fit_expansion(grid.points(), vals, basis).coefficient(exponent);
}

Outcome ac1() {
  Outcome o;
  run_claim(o, make_claim(ClaimId::MIK, {0, 0, 1, 1}), 2, 1e-3);
  run_claim(o, make_claim(ClaimId::MIK, {0, 0, 1, 2}), 2, 1e-3);
  run_claim(o, make_claim(ClaimId::MIK, {0, 0, 2, 2}), 2, 1e-3);
  return o;
}

Outcome ac2() {
  Outcome o;
  for (auto [a, b] : {std::pair{-0.4, -0.4}, std::pair{0.5, -0.7}, std::pair{1.3, -0.9}}) {
    run_claim(o, make_claim(ClaimId::THM1, {a, b, 1, 1}), 3, 1e-3);
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (double a : {-0.5, 0.3, 1.7}) {
    run_claim(o, make_claim(ClaimId::THM2, {a, 0, 1, 1}), 3, 1e-3);
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  const double a = 0.5;
  run_claim(o, make_claim(ClaimId::THM2X, {a, 0, 1, 1}), 3, 1e-3);

  // Same products with the balancing coefficient Gamma(a+1) Gamma(-a-1).
  Claim fixed = make_claim(ClaimId::THM2X, {a, 0, 1, 1});
  const double pi = std::numbers::pi;
  fixed.lhs[1].coefficient = -pi / ((a + 1.0) * sin_pi(a));
  fixed.rhs_coefficient = -pi / (2.0 * sin_pi(a));
  fixed.statement = "x_+^a x_-^(-a-2) - pi/((a+1) sin(pi a)) delta delta = -pi/(2 sin(pi a)) delta'";
  Outcome alt;
  run_claim(alt, fixed, 3, 1e-3);
  o.info = std::string("with -pi/((a+1) sin(pi a)) delta delta and limit -pi/(2 sin(pi a)) delta' ") +
           (alt.pass ? "the same check passes" : "the same check also fails");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (double a : {0.5, -0.3}) {
    run_claim(o, make_claim(ClaimId::THM3, {a, 0, 1, 1}), 3, 1e-3);
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  run_claim(o, make_claim(ClaimId::COR2, {0.7, 0, 1, 1}), 3, 1e-3);
  run_claim(o, make_claim(ClaimId::COR3, {0.7, 0, 1, 1}), 3, 1e-3);
  return o;
}

Outcome ac7() {
  Outcome o;
  for (int p = 1; p <= 4; ++p) {
    for (double a : {0.5, -0.3}) {
      run_claim(o, make_claim(ClaimId::THM4, {a, 0, p, 1}), 3, 2e-3);
    }
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const auto& m : families(3, 10)) {
    const double l2 = to_double(m->l2_norm_squared());
    const auto dd = multiply(embed_delta(0, m), embed_delta(0, m));
    const auto ddp = multiply(embed_delta(0, m), embed_delta(1, m));
    for (const auto& psi : default_test_functions()) {
      const double want1 = psi(0.0) * l2;
      const double want2 = -to_double(psi.derivative_at_zero(1)) * l2 / 2.0;
      const double got1 = fit_coefficient(dd, psi, -1.0, integer_exponents(-1, 3));
      const double got2 = fit_coefficient(ddp, psi, -1.0, integer_exponents(-2, 3));
      o.require(std::abs(got1 - want1) <= 1e-4 * std::max(std::abs(want1), l2),
                "delta delta for " + m->descriptor() + "/" + psi.name() + ": " + fmt(got1));
      o.require(std::abs(got2 - want2) <= 1e-4 * std::max(std::abs(want2), l2),
                "delta delta' for " + m->descriptor() + "/" + psi.name() + ": " + fmt(got2));
    }
    for (int p = 1; p <= 4; ++p) {
      const auto step = proof_step_check(p, 0.5, *m, default_test_function("generic"));
      o.require(step.pass, "S/R cancellation at p = " + std::to_string(p));
    }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const auto& c : run_identity_suite(12, 12, 6)) {
    o.require(c.status, c.identity_id + " " + c.parameters.dump() + " " + c.detail);
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  std::vector<double> eps;
  std::vector<double> vals;
  for (int k = 0; k <= 10; ++k) {
    eps.push_back(0.1 * std::pow(0.6, k));
    vals.push_back(2.0 / eps.back() + 3.0 + eps.back());
  }
  const auto f = fit_expansion(eps, vals, {-1, 0, 1});
  o.require(std::abs(f.coefficient(-1) - 2) < 1e-10 && std::abs(f.coefficient(0) - 3) < 1e-10 &&
                std::abs(f.coefficient(1) - 1) < 1e-10,
            "synthetic fit");

  const Mollifier plain = build_mollifier(0, 2, Rational(1), 0, 0);
  o.require(plain.l2_norm_squared() == Rational(5, 7) && plain.moment(2) == Rational(1, 7),
            "plain bump");
  const auto fam = families(3, 10);
  for (const auto& m : fam) {
    o.require(m->moment(0) == 1 && m->moment(1) == 0 && m->moment(2) == 0,
              "moments of " + m->descriptor());
  }

  const auto m = fam.front();
  for (double a : {0.0, 1.0, 2.0}) {
    const auto nu = embed_nu(Sign::Plus, {a, default_reduction_order(a)}, m);
    const double x = 10.0 * 0.01;
    const double want = std::pow(x, a) / std::tgamma(a + 1.0);
    o.require(std::abs(nu.value(0.01, x) - want) <= 1e-9 * want, "nu far field a = " + fmt(a));
  }
  // Far-field values carry m_(q+1) (eps/x)^(q+1); use six vanishing moments.
  const auto m6 = std::make_shared<const Mollifier>(build_mollifier(6, 10, Rational(1), 1));
  const auto half = embed_x_pm_a(Sign::Plus, {0.5, 3}, m6);
  o.require(std::abs(half.value(0.01, 0.1) - std::sqrt(0.1)) <= 1e-8 * std::sqrt(0.1),
            "x_+^0.5 far field");
  o.require(std::abs(embed_log_abs(m6).value(0.01, 0.1) - std::log(0.1)) <= 1e-8, "log far field");
  const auto lg = embed_log_abs(m);

  const auto psi = default_test_function("generic");
  for (double a : {0.5, -0.5}) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const auto nu = embed_nu(sign, {a, default_reduction_order(a)}, m);
      const double want = action(Distribution::nu(sign, a), psi);
      const double got = pair(nu, psi, 1e-4).value;
      o.require(std::abs(got - want) <= 1e-6 * std::abs(want), "nu pairing vs action a = " + fmt(a));
    }
  }
  const double log_oracle = integrate_graded(
      [&](double x) { return std::log(x) * (psi(x) + psi(-x)); }, 0.0, psi.support(), 1e-16, true, 30);
  o.require(std::abs(pair(lg, psi, 1e-4).value - log_oracle) <= 1e-7, "log pairing");
  const double inv2 = action(Distribution::x_neg_power(2), psi);
  o.require(std::abs(pair(embed_x_neg_power(2, m), psi, 1e-4).value - inv2) <= 1e-6 * std::abs(inv2),
            "x^-2 pairing");

  const std::vector<std::string> args = {"verify", "--claim", "thm2", "--a", "0.3"};
  std::ostringstream o1;
  std::ostringstream o2;
  std::ostringstream e1;
  std::ostringstream e2;
  const int c1 = run_cli(args, o1, e1);
  const int c2 = run_cli(args, o2, e2);
  o.require(c1 == 0 && c2 == 0 && o1.str() == o2.str() && !o1.str().empty(),
            "byte-identical reports");
  return o;
}

}  // namespace

int main() {
  struct Item {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {"AC1", "Mikusinski products (1,1), (1,2), (2,2)", ac1},
      {"AC2", "nu_+^a nu_-^b - nu_-^(a+b+1) delta ~ 0", ac2},
      {"AC3", "balanced nu_+^a nu_-^(-a-2) at a = -0.5, 0.3, 1.7", ac3},
      {"AC4", "x_+^a form at a = 0.5 with the stated coefficients", ac4},
      {"AC5", "nu_+^a nu_-^(-a-3) + (2a+3) delta delta'", ac5},
      {"AC6", "antisymmetric and symmetric combinations at a = 0.7", ac6},
      {"AC7", "general order p = 1..4", ac7},
      {"AC8", "delta products and S/R cancellation", ac8},
      {"AC9", "binomial identity suite", ac9},
      {"AC10", "fit, moments, embeddings, determinism", ac10},
  };
  int failed = 0;
  for (const auto& item : items) {
    Outcome o;
    try {
      o = item.run();
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    report(item.id, item.title, o);
    failed += o.pass ? 0 : 1;
  }
  std::cout << (items.size() - failed) << "/" << items.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
