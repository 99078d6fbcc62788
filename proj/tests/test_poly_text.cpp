#include <gtest/gtest.h>

#include "generators.hpp"
#include "tamemdeg/poly_text.hpp"

using namespace tamemdeg;

TEST(PolyText, ParsesIndexedNames) {
  Polynomial p = parse_polynomial("x1^2*x2 - 3/2*x3", indexed_var_names(3));
  EXPECT_EQ(p.n(), 3);
  EXPECT_EQ(p.coefficient(Monomial{2, 1, 0}), Rational(1));
  EXPECT_EQ(p.coefficient(Monomial{0, 0, 1}), Rational(-3, 2));
  EXPECT_EQ(parse_polynomial("x1^2*x2 - 3/2*x3", 3), parse_polynomial("x^2*y - 3/2*z", 3));
}

TEST(PolyText, ParsesAliases) {
  Polynomial p = parse_polynomial("x + z^4", {"x", "y", "z"});
  EXPECT_EQ(p.n(), 3);
  EXPECT_EQ(to_string(p), "z^4 + x");
}

TEST(PolyText, CanonicalPrint) {
  EXPECT_EQ(to_string(parse_polynomial("y+3/2*x*z^2+z^6", 3)), "z^6 + 3/2*x*z^2 + y");
  EXPECT_EQ(to_string(parse_polynomial("-x + 1", 2)), "-x + 1");
  EXPECT_EQ(to_string(parse_polynomial("0", 2)), "0");
  EXPECT_EQ(to_string(parse_polynomial("x - x", 2)), "0");
  EXPECT_EQ(to_string(parse_polynomial("-2*x*y^3 - 1/2", 2)), "-2*x*y^3 - 1/2");
  EXPECT_EQ(to_string(parse_polynomial("x4 + x1", 4)), "x1 + x4");
}

TEST(PolyText, ErrorsCarryColumns) {
  try {
    parse_polynomial("x + 2y", 3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_polynomial("x / y", 3), ParseError);
  EXPECT_THROW(parse_polynomial("x^2^3", 3), ParseError);
  EXPECT_THROW(parse_polynomial("w + 1", 3), ParseError);
  EXPECT_THROW(parse_polynomial("(x + 1", 3), ParseError);
  EXPECT_THROW(parse_polynomial("", 3), ParseError);
  EXPECT_THROW(parse_polynomial("1/0", 3), ParseError);
  EXPECT_THROW(parse_polynomial("x^-1", 3), ParseError);
}

TEST(PolyText, VariableDeclarations) {
  EXPECT_THROW(parse_polynomial("x", VarNames{"x", "x"}), DomainError);
  EXPECT_THROW(parse_polynomial("a", VarNames{"a"}), DomainError);
  EXPECT_EQ(default_var_names(2), (VarNames{"x", "y"}));
  EXPECT_EQ(default_var_names(4), (VarNames{"x1", "x2", "x3", "x4"}));
}

TEST(PolyText, WhitespaceIsInsignificant) {
  EXPECT_EQ(parse_polynomial("  x ^ 2 *  y -  3 / 2 ", 3), parse_polynomial("x^2*y-3/2", 3));
}

TEST(PolyText, RoundTripOnRandomCorpus) {
  gen::Rng r(7);
  for (int i = 0; i < 300; ++i) {
    int n = static_cast<int>(r.uniform(1, 5));
    Polynomial p = gen::polynomial(r, n, static_cast<int>(r.uniform(0, 6)), 6);
    std::string s = to_string(p);
    EXPECT_EQ(parse_polynomial(s, n), p) << s;
    EXPECT_EQ(to_string(parse_polynomial(s, n)), s);
  }
}
