#include <gtest/gtest.h>

#include <sstream>

#include "common/gen.hpp"
#include "polyseq/exactnum.hpp"

using namespace polyseq;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(-3, -6).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(2, 4).denominator(), 2);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse(" -4/6 "), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("+5/10"), Rational(1, 2));
  EXPECT_EQ(Rational("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational::parse("a/2"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, ArithmeticAndPower) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(-2).pow(0), Rational(1));
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
  EXPECT_THROW(Rational(0).pow(-1), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  std::ostringstream os;
  os << Rational(-7, 21);
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(Rational, LongLongConstructor) {
  const long long big = 9000000000000000000LL;
  EXPECT_EQ(Rational(big).str(), "9000000000000000000");
}

TEST(Rational, RoundTripProperty) {
  gen::Gen g(101);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational r = g.rational(50, 30);
    const Rational s = g.nonzero_rational(50, 30);
    EXPECT_EQ((r + s) - s, r);
    EXPECT_EQ((r * s) / s, r);
    EXPECT_EQ(Rational::parse(r.str()), r);
    // canonical: equal values share one representation
    EXPECT_EQ((r * s / s).str(), r.str());
  }
}

TEST(Helpers, FactorialBinomialSign) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(2, 5), Rational(0));
  EXPECT_EQ(sign_power(3), Rational(-1));
  EXPECT_EQ(sign_power(4), Rational(1));
}

TEST(Params, Examples) {
  const Params p = make_params(1, Rational(1), {Rational(1)}, 1, 0);
  EXPECT_EQ(p.l(), Rational(1));
  EXPECT_EQ(p, classic_params());

  const Params p2 = make_params(2, Rational(1, 3), {Rational(2), Rational(1, 2)}, 2, 1);
  EXPECT_EQ(p2.l(), Rational(1));
  EXPECT_EQ(p2.a(), 2);
  EXPECT_EQ(p2.m(), 1u);
  EXPECT_EQ(p2.L().size(), 2u);

  EXPECT_THROW(make_params(0, Rational(1), {Rational(1)}, 1, 0), ZeroParameter);
}

TEST(Params, Errors) {
  EXPECT_THROW(make_params(1, Rational(0), {Rational(1)}, 1, 0), ZeroParameter);
  EXPECT_THROW(make_params(1, Rational(1), {Rational(1), Rational(0)}, 1, 0), ZeroParameter);
  EXPECT_THROW(make_params(1, Rational(1), std::span<const Rational>{}, 1, 0), ZeroParameter);
  EXPECT_THROW(make_params(1, Rational(1), {Rational(1)}, 0, 0), ZeroOrder);
  EXPECT_THROW(make_params(1, Rational(1), {Rational(1)}, 1, -1), ShiftNegative);
  EXPECT_THROW(make_params(-2, Rational(1), {Rational(1)}, 1, 2), PoleError);
  EXPECT_NO_THROW(make_params(-2, Rational(1), {Rational(1)}, 1, 3));
}

TEST(Params, DerivedProductAndCopies) {
  gen::Gen g(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto L = g.box(4);
    Rational prod(1);
    for (const auto &v : L) {
      prod *= v;
    }
    const Params p = make_params(g.nonzero(1, 5), g.nonzero_rational(), L, g.nonzero(-3, 3), 0);
    EXPECT_EQ(p.l(), prod);
    EXPECT_EQ(p.with_shift(3).m(), 3u);
    EXPECT_EQ(p.with_shift(3).l(), prod);
    EXPECT_EQ(p.with_order(-2).k(), -2);
  }
}

TEST(Params, PoleCheck) {
  EXPECT_TRUE(pole_check(make_params(-2, Rational(1), {Rational(1)}, 1, 0), 2));
  EXPECT_FALSE(pole_check(make_params(1, Rational(1), {Rational(1)}, 3, 0), 5));
  EXPECT_FALSE(pole_check(make_params(-2, Rational(1), {Rational(1)}, -1, 0), 2));
}

TEST(Params, PowerHelpers) {
  EXPECT_EQ(inverse_power(2, 3), Rational(1, 8));
  EXPECT_EQ(inverse_power(2, -3), Rational(8));
  EXPECT_EQ(inverse_power(0, -2), Rational(0));
  EXPECT_THROW(inverse_power(0, 2), PoleError);
  EXPECT_EQ(shift_prefactor(make_params(2, Rational(1), {Rational(1)}, 2, 1)), Rational(9, 4));
  EXPECT_EQ(to_string(classic_params()), "a=1 q=1 L=[1] k=1 m=0");
}
