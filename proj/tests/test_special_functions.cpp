#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gflab/errors.hpp"
#include "gflab/rational.hpp"
#include "gflab/special_functions.hpp"

using namespace gflab;

TEST(Gamma, IntegerAndHalfValues) {
  EXPECT_NEAR(gflab::gamma(1.0), 1.0, 1e-14);
  EXPECT_NEAR(gflab::gamma(5.0), 24.0, 24.0 * 1e-13);
  EXPECT_NEAR(gflab::gamma(0.5), 1.772453850905516, 1e-13);
  EXPECT_NEAR(gflab::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi), 1e-12);
}

TEST(Gamma, PolesThrow) {
  EXPECT_THROW(gflab::gamma(0.0), PoleError);
  EXPECT_THROW(gflab::gamma(-3.0), PoleError);
  EXPECT_THROW(gflab::gamma(-2.0 + 1e-11), PoleError);
  EXPECT_NO_THROW(gflab::gamma(-2.0 + 1e-6));
}

TEST(Gamma, Recurrence) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  int checked = 0;
  while (checked < 1000) {
    const double x = dist(gen);
    if (near_integer(x, 1e-6) || near_integer(x + 1.0, 1e-6)) {
      continue;
    }
    const double lhs = gflab::gamma(x + 1.0);
    const double rhs = x * gflab::gamma(x);
    ASSERT_NEAR(lhs / rhs, 1.0, 1e-11) << "x = " << x;
    ++checked;
  }
}

TEST(Gamma, Reflection) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double a = dist(gen);
    if (near_integer(a, 1e-6)) {
      continue;
    }
    const double v = gflab::gamma(a) * gflab::gamma(1.0 - a) * sin_pi(a) / std::numbers::pi;
    ASSERT_NEAR(v, 1.0, 1e-10) << "a = " << a;
  }
}

TEST(Binomial, DefinitionCases) {
  EXPECT_EQ(binomial_real(7.3, 0), 1.0);
  EXPECT_EQ(binomial_real(2.5, -1), 0.0);
  EXPECT_NEAR(binomial_real(-0.5, 2), 0.375, 1e-15);
  EXPECT_NEAR(binomial_real(3.5, 3), 2.1875, 1e-14);
}

TEST(Binomial, AgreesWithExactProduct) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> num(-400, 400);
  std::uniform_int_distribution<int> den(1, 37);
  for (int i = 0; i < 300; ++i) {
    const Rational x(num(gen), den(gen));
    const int n = i % 13;
    Rational exact = 1;
    for (int k = 0; k < n; ++k) {
      exact *= (x - k);
      exact /= (k + 1);
    }
    const double got = binomial_real(x.get_d(), n);
    const double want = exact.get_d();
    ASSERT_NEAR(got, want, 1e-13 * std::max(1.0, std::abs(want))) << to_string(x) << " " << n;
  }
}

TEST(Beta, Values) {
  EXPECT_NEAR(beta_ratio(0.0, 0.0), 1.0, 1e-14);
  EXPECT_NEAR(beta_ratio(1.0, 1.0), 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(beta_ratio(0.5, -0.5), std::numbers::pi / 2.0, 1e-12);
}

TEST(Beta, DomainErrors) {
  EXPECT_THROW(beta_ratio(-1.0, 0.5), DomainError);
  EXPECT_THROW(beta_ratio(0.5, -1.2), DomainError);
}

TEST(SinPi, ExactAtIntegers) {
  EXPECT_EQ(sin_pi(3.0), 0.0);
  EXPECT_NEAR(sin_pi(0.5), 1.0, 1e-15);
  EXPECT_NEAR(sin_pi(-1.5), 1.0, 1e-15);
}
