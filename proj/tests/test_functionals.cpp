#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "gflab/association.hpp"
#include "gflab/errors.hpp"
#include "gflab/fit.hpp"
#include "gflab/functionals.hpp"
#include "gflab/quadrature.hpp"

using namespace gflab;

namespace {

MollifierPtr family(std::uint64_t seed) {
  return std::make_shared<const Mollifier>(build_mollifier(2, 10, Rational(1), seed));
}

// lim_{h->0} [int_{|x|>h} psi/x^2 dx - 2 psi(0)/h], by direct quadrature on
// x = e^t and Richardson in h.
double brute_force_finite_part(const TestFunction& psi) {
  auto at = [&](double h) {
    const double lo = std::log(h);
    const double hi = std::log(psi.support());
    const int panels = 200;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
      const double a = lo + (hi - lo) * k / panels;
      const double b = lo + (hi - lo) * (k + 1) / panels;
      sum += integrate_gl(
          [&](double t) {
            const double x = std::exp(t);
            return (psi(x) + psi(-x)) / x;
          },
          a, b, 20);
    }
    return sum - 2.0 * psi(0.0) / h;
  };
  const double h = 1e-3;
  return 2.0 * at(h / 2.0) - at(h);
}

}  // namespace

TEST(TestFunction, Examples) {
  const RationalPoly one(Rational(1));
  const TestFunction a = make_test_function(Rational(1), 4, one);
  EXPECT_EQ(a.derivative_at_zero(0), Rational(1));
  EXPECT_EQ(a.derivative_at_zero(1), Rational(0));
  const TestFunction b = make_test_function(Rational(1), 4, RationalPoly::linear(1, 1));
  EXPECT_EQ(b.derivative_at_zero(0), Rational(1));
  EXPECT_EQ(b.derivative_at_zero(1), Rational(1));
  for (const auto& psi : default_test_functions()) {
    EXPECT_EQ(psi(psi.support()), 0.0);
    EXPECT_EQ(psi(-psi.support()), 0.0);
  }
  EXPECT_THROW(default_test_function("odd"), ConfigError);
}

TEST(TestFunction, DefaultSetPinsEveryCoefficient) {
  const auto even = default_test_function("even");
  const auto generic = default_test_function("generic");
  const auto zero = default_test_function("zero");
  EXPECT_EQ(even.derivative_at_zero(1), Rational(0));
  EXPECT_EQ(zero.derivative_at_zero(0), Rational(0));
  for (int n = 0; n <= 5; ++n) {
    EXPECT_NE(generic.derivative_at_zero(n), Rational(0)) << n;
  }
}

TEST(Multiply, Examples) {
  const auto m = family(1);
  const auto d = embed_delta(0, m);
  EXPECT_TRUE(multiply(d, GeneralizedFunctionRep::zero(m)).is_zero());
  const double eps = 0.01;
  const double phi0 = m->eval_derivative(0, 0.0);
  EXPECT_NEAR(multiply(d, d).value(eps, 0.0), phi0 * phi0 / (eps * eps), 1e-9);
}

TEST(Pair, DeltaSquaredLeadingTerm) {
  const auto m = family(2);
  const double l2 = to_double(m->l2_norm_squared());
  const auto dd = multiply(embed_delta(0, m), embed_delta(0, m));
  const auto ddp = multiply(embed_delta(0, m), embed_delta(1, m));
  const EpsilonGrid grid;
  const auto eps = grid.points();
  for (const auto& psi : default_test_functions()) {
    std::vector<double> v1;
    std::vector<double> v2;
    for (const auto& r : pair_sweep(dd, psi, eps)) {
      v1.push_back(r.value);
    }
    for (const auto& r : pair_sweep(ddp, psi, eps)) {
      v2.push_back(r.value);
    }
    const auto f1 = fit_expansion(eps, v1, integer_exponents(-1, 3));
    const auto f2 = fit_expansion(eps, v2, integer_exponents(-2, 3));
    const double psi0 = psi(0.0);
    const double dpsi0 = to_double(psi.derivative_at_zero(1));
    EXPECT_NEAR(f1.coefficient(-1), psi0 * l2, 1e-6 * std::max(1.0, std::abs(psi0 * l2)));
    EXPECT_NEAR(f2.coefficient(-2), 0.0, 1e-8);
    EXPECT_NEAR(f2.coefficient(-1), -dpsi0 / 2.0 * l2, 1e-6 * std::max(1.0, std::abs(dpsi0 * l2)));
  }
}

TEST(Pair, DeltaIsThirdOrderForSymmetricPhi) {
  const auto m = std::make_shared<const Mollifier>(build_mollifier(2, 10, Rational(1), 0, 0));
  const auto d = embed_delta(0, m);
  const auto psi = default_test_function("generic");
  const double e1 = std::abs(pair(d, psi, 0.02).value - psi(0.0));
  const double e2 = std::abs(pair(d, psi, 0.01).value - psi(0.0));
  EXPECT_LT(e1, 1e-4);
  EXPECT_GT(e1 / e2, 6.0);
}

TEST(Pair, Linearity) {
  const auto m = family(3);
  const auto f = multiply(embed_nu(Sign::Plus, {0.3, 2}, m), embed_nu(Sign::Minus, {-2.3, 4}, m));
  const auto g = multiply(embed_delta(0, m), embed_delta(0, m));
  const auto psi = default_test_function("generic");
  const double eps = 0.004;
  const double lhs = pair(2.5 * f - 0.75 * g, psi, eps).value;
  const double rhs = 2.5 * pair(f, psi, eps).value - 0.75 * pair(g, psi, eps).value;
  EXPECT_NEAR(lhs, rhs, 1e-10 * std::abs(rhs));
}

TEST(Pair, RefinementChangesLittle) {
  const auto m = family(1);
  const auto f = multiply(embed_nu(Sign::Plus, {0.5, 3}, m), embed_nu(Sign::Minus, {-2.5, 4}, m));
  const auto psi = default_test_function("generic");
  for (double eps : {0.1, 0.01, 0.001}) {
    const PairingResult r = pair(f, psi, eps);
    EXPECT_FALSE(r.flagged);
    EXPECT_LE(r.error, 1e-9 * std::max(1.0, std::abs(r.value)));
  }
}

TEST(Action, Examples) {
  const TestFunction b = make_test_function(Rational(1), 4, RationalPoly::linear(1, 1));
  EXPECT_EQ(action(Distribution::delta(1), b), -1.0);
  EXPECT_EQ(action(Distribution::delta(0), b), 1.0);
  EXPECT_NEAR(action(Distribution::x_neg_power(1), default_test_function("even")), 0.0, 1e-15);
  EXPECT_EQ(action(Distribution::zero(), b), 0.0);
}

TEST(Action, FinitePartMatchesBruteForce) {
  const TestFunction psi = make_test_function(Rational(1), 4, RationalPoly(Rational(1)));
  const double want = brute_force_finite_part(psi);
  EXPECT_NEAR(action(Distribution::x_neg_power(2), psi), want, 1e-6 * std::abs(want));
  const TestFunction g = default_test_function("generic");
  const double wg = brute_force_finite_part(g);
  EXPECT_NEAR(action(Distribution::x_neg_power(2), g), wg, 1e-6 * std::abs(wg));
}

TEST(Action, NuAgainstDirectIntegral) {
  // a = 1/2 > -1: int_0^L x^a psi(x) dx / Gamma(a+1) with x = u^2
  const TestFunction psi = default_test_function("generic");
  const double a = 0.5;
  const double direct = integrate_gl([&](double u) { return 2.0 * u * u * psi(u * u); }, 0.0,
                                     std::sqrt(psi.support()), 60) /
                        std::tgamma(a + 1.0);
  EXPECT_NEAR(action(Distribution::nu(Sign::Plus, a), psi), direct, 1e-6 * std::abs(direct));
}

TEST(Csv, Format) {
  std::vector<PairingResult> rows = {{0.1, 2.5, 1e-12, false}, {0.06, -3.0, 0.0, false}};
  EXPECT_EQ(to_csv(rows), "epsilon,value,err\n0.1,2.5,1e-12\n0.06,-3,0\n");
}
