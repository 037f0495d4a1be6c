#include <gtest/gtest.h>

#include "gflab/identities.hpp"

using namespace gflab;

TEST(BinomPoly, Examples) {
  EXPECT_EQ(binom_poly(Rational(0), 0), RationalPoly(Rational(1)));
  EXPECT_EQ(binom_poly(Rational(0), 1), RationalPoly::monomial(1));
  EXPECT_EQ(binom_poly(Rational(2), 2),
            RationalPoly(std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)}));
  EXPECT_TRUE(binom_poly(Rational(4), -1).is_zero());
}

TEST(BinomRational, Reflection) {
  EXPECT_EQ(binom_rational(Rational(-3, 2), 2), Rational(15, 8));
  EXPECT_EQ(binom_rational(Rational(5, 2), 2), Rational(15, 8));
}

TEST(Reflection, Holds) {
  EXPECT_TRUE(verify_reflection(0, 0));
  EXPECT_TRUE(verify_reflection(12, 12));
  for (const auto& c : reflection_certificates(12)) {
    EXPECT_TRUE(c.status) << c.identity_id << " " << c.parameters.dump() << " " << c.detail;
  }
}

TEST(Addition, Holds) {
  EXPECT_TRUE(verify_addition(2, 1));
  EXPECT_TRUE(verify_addition(12, 4));
  // C(1+1, 2) = C(1,0)C(1,2) + C(1,1)C(1,1) + C(1,2)C(1,0) = 0 + 1 + 0
  EXPECT_EQ(binom_rational(Rational(2), 2),
            binom_rational(Rational(1), 1) * binom_rational(Rational(1), 1));
}

TEST(RSum, Holds) { EXPECT_TRUE(verify_r_sum(12)); }

TEST(SReduction, LowestCases) {
  const auto [le, re] = s_reduction_even_sides(1, 0);
  EXPECT_EQ(le, re);
  EXPECT_LE(le.degree(), 1);
  const auto [lo, ro] = s_reduction_odd_sides(1, 0);
  EXPECT_EQ(lo, ro);
  EXPECT_EQ(lo.degree(), 0);
  EXPECT_EQ(lo, RationalPoly(Rational(2)));
}

TEST(SReduction, Holds) {
  EXPECT_TRUE(verify_S_reduction(6));
  for (const auto& c : s_reduction_certificates(6)) {
    EXPECT_TRUE(c.status) << c.parameters.dump() << " " << c.detail;
  }
}

TEST(Identities, FloatCrossCheck) {
  for (const auto& c : float_cross_check(12, 6)) {
    EXPECT_TRUE(c.status) << c.identity_id << " " << c.detail;
  }
}

TEST(Identities, SuiteIsStable) {
  const auto a = certificates_to_json(run_identity_suite(12, 12, 6)).dump();
  const auto b = certificates_to_json(run_identity_suite(12, 12, 6)).dump();
  EXPECT_EQ(a, b);
  for (const auto& c : run_identity_suite(12, 12, 6)) {
    EXPECT_TRUE(c.status) << c.identity_id;
  }
}
