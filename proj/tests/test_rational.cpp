#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tamemdeg/rational.hpp"

using tamemdeg::Rational;

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), tamemdeg::DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), tamemdeg::DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), tamemdeg::DomainError);
  EXPECT_THROW(Rational::parse("abc"), tamemdeg::DomainError);
  EXPECT_THROW(Rational::parse("1/-2"), tamemdeg::DomainError);
}

TEST(Rational, OrderingAndPowers) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, BinomialMatchesPascal) {
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) EXPECT_EQ(tamemdeg::binomial(n, k), Rational(oracle::binomial(n, k)));
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  gen::Rng r(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = r.small_rational(50), b = r.small_rational(50), c = r.small_rational(50);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) { EXPECT_EQ(a / b * b, a); }
  }
}
