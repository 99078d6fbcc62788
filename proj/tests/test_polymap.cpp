#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tamemdeg/polymap.hpp"

using namespace tamemdeg;

namespace {
PolyMap M(const std::vector<std::string>& c) { return PolyMap::parse(c); }

// Composition through the dense oracle.
PolyMap oracle_compose(const PolyMap& f, const PolyMap& g) {
  std::vector<oracle::Dense> args;
  for (const auto& c : g.components()) args.push_back(oracle::from_poly(c));
  std::vector<Polynomial> out;
  for (const auto& c : f.components()) out.push_back(oracle::to_poly(g.n(), oracle::substitute(oracle::from_poly(c), args, g.n())));
  return PolyMap(out);
}
}  // namespace

TEST(PolyMap, ConstructionAndParse) {
  EXPECT_THROW(PolyMap({Polynomial::var(2, 0)}), DimensionError);
  EXPECT_THROW(M({"x", "y", "z", "x"}), ParseError);
  EXPECT_THROW(PolyMap::parse({"x", "y"}, {"x", "y", "z"}), DimensionError);
  PolyMap f = M({"x + y^2", "y"});
  EXPECT_EQ(f.n(), 2);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.component_strings({"x", "y"}), (std::vector<std::string>{"y^2 + x", "y"}));
}

TEST(PolyMap, GalleryMultidegrees) {
  PolyMap t21 = compose(gallery("su_t2"), gallery("su_t1"));
  EXPECT_EQ(mdeg(t21), (Multidegree{9, 6, 3}));
  EXPECT_EQ(mdeg(compose(gallery("su_t3"), t21)), (Multidegree{9, 6, 8}));
  EXPECT_EQ(mdeg(gallery("su_example")), (Multidegree{9, 6, 8}));
  EXPECT_EQ(mdeg(gallery("nagata")), (Multidegree{5, 3, 1}));
  EXPECT_EQ(gallery("swap13"), M({"z", "y", "x"}));
  EXPECT_EQ(mdeg(PolyMap::identity(3)), (Multidegree{1, 1, 1}));
  EXPECT_THROW(gallery("nope"), DomainError);
  for (const auto& name : gallery_names()) EXPECT_EQ(gallery(name).n(), 3) << name;
}

TEST(PolyMap, GalleryMatchesOracleComposition) {
  PolyMap f = oracle_compose(gallery("su_t2"), gallery("su_t1"));
  f = oracle_compose(gallery("su_t3"), f);
  f = oracle_compose(gallery("su_l"), f);
  EXPECT_EQ(gallery("su_example"), f);
}

TEST(PolyMap, NagataPowers) {
  PolyMap tn = compose(gallery("swap13"), gallery("nagata"));
  PolyMap acc = PolyMap::identity(3);
  Polynomial inv = parse_polynomial("y^2 + z*x", 3);
  for (int n = 1; n <= 6; ++n) {
    acc = oracle_compose(tn, acc);
    PolyMap p = nagata_power(n);
    EXPECT_EQ(p, acc) << n;
    EXPECT_EQ(mdeg(p), (Multidegree{4 * n - 3, 4 * n - 1, 4 * n + 1}));
    EXPECT_EQ(p[1] * p[1] + p[2] * p[0], inv);
  }
  EXPECT_THROW(nagata_power(0), DomainError);
}

TEST(PolyMap, LinearParts) {
  EXPECT_EQ(linear_part(M({"x + 1", "y + x"})), M({"x", "y + x"}));
  EXPECT_EQ(linear_part(gallery("nagata")), PolyMap::identity(3));
  EXPECT_EQ(linear_part(M({"x", "y + x^3"})), PolyMap::identity(2));
}

TEST(PolyMap, Constructors) {
  Invertible e = elementary(2, 1, parse_polynomial("x^3", 2));
  EXPECT_EQ(e.map, M({"x", "y + x^3"}));
  EXPECT_EQ(e.inverse, M({"x", "y - x^3"}));
  EXPECT_THROW(elementary(2, 1, parse_polynomial("y^2", 2)), DomainError);
  Invertible dj = de_jonquieres({Rational(1), Rational(1), Rational(1)}, {Polynomial(3), Polynomial(3), Polynomial(3)});
  EXPECT_EQ(dj.map, PolyMap::identity(3));
  Invertible t2 = de_jonquieres({Rational(6), Rational(4), Rational(1)},
                                {parse_polynomial("6*y*z + z^3", 3), parse_polynomial("z^2", 3), Polynomial(3)});
  EXPECT_EQ(t2.map, gallery("su_t2"));
  EXPECT_EQ(compose(t2.map, t2.inverse), PolyMap::identity(3));
  EXPECT_THROW(de_jonquieres({Rational(0), Rational(1)}, {Polynomial(2), Polynomial(2)}), DomainError);
  EXPECT_THROW(de_jonquieres({Rational(1), Rational(1)}, {parse_polynomial("x", 2), Polynomial(2)}), DomainError);
  EXPECT_THROW(linear({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), DomainError);
  EXPECT_THROW(triangular({0, 1, 2}, {parse_polynomial("z", 3), parse_polynomial("x", 3)}), DomainError);
  EXPECT_TRUE(is_affine_automorphism(M({"y + 1", "x"})));
  EXPECT_FALSE(is_affine_automorphism(M({"x + y", "x + y"})));
  EXPECT_FALSE(is_affine_automorphism(M({"x^2", "y"})));
}

TEST(PolyMap, ConstructorInversesAreExact) {
  gen::Rng r(301);
  for (int i = 0; i < 60; ++i) {
    Invertible a = gen::affine(r, 3);
    EXPECT_EQ(compose(a.map, a.inverse), PolyMap::identity(3));
    EXPECT_EQ(compose(a.inverse, a.map), PolyMap::identity(3));
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), std::mt19937(static_cast<unsigned>(i)));
    Polynomial f1 = gen::univariate(r, 3, perm[0], static_cast<int>(r.uniform(1, 3)));
    Polynomial f2 = gen::polynomial(r, 2, static_cast<int>(r.uniform(1, 3)), 3)
                        .substitute({Polynomial::var(3, perm[0]), Polynomial::var(3, perm[1])});
    Invertible t = triangular(perm, {f1, f2});
    EXPECT_EQ(compose(t.map, t.inverse), PolyMap::identity(3));
    EXPECT_EQ(compose(t.inverse, t.map), PolyMap::identity(3));
    Polynomial g = gen::polynomial(r, 2, static_cast<int>(r.uniform(1, 4)), 3)
                       .substitute({Polynomial::var(3, (perm[2] + 1) % 3), Polynomial::var(3, (perm[2] + 2) % 3)});
    Invertible e = elementary(3, perm[2], g);
    EXPECT_EQ(compose(e.map, e.inverse), PolyMap::identity(3));
    Invertible dj = de_jonquieres({r.nonzero_int(), r.nonzero_int(), r.nonzero_int()},
                                  {gen::polynomial(r, 2, 2, 3).substitute({Polynomial::var(3, 1), Polynomial::var(3, 2)}),
                                   gen::univariate(r, 3, 2, 2), Polynomial::constant(3, r.small_rational())});
    EXPECT_EQ(compose(dj.map, dj.inverse), PolyMap::identity(3));
    EXPECT_EQ(compose(dj.inverse, dj.map), PolyMap::identity(3));
  }
}

TEST(PolyMap, MultidegreeInvariantUnderLinearChange) {
  gen::Rng r(302);
  for (int i = 0; i < 60; ++i) {
    PolyMap f = gen::tame3(r, 3);
    Invertible l = linear(gen::invertible_matrix(r, 3));
    EXPECT_EQ(mdeg(compose(f, l.map)), mdeg(f));
  }
}

TEST(PolyMap, CompositionIsAssociative) {
  gen::Rng r(303);
  for (int i = 0; i < 25; ++i) {
    PolyMap a = gen::tame3(r, 2), b = gen::tame3(r, 2), c = gen::tame3(r, 2);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, PolyMap::identity(3)), a);
    EXPECT_EQ(compose(PolyMap::identity(3), a), a);
    EXPECT_EQ(compose_chain({a, b, c}), oracle_compose(a, oracle_compose(b, c)));
  }
  EXPECT_THROW(compose(PolyMap::identity(2), PolyMap::identity(3)), DimensionError);
}

TEST(PolyMap, DegreeOfCompositionIsSubmultiplicative) {
  gen::Rng r(304);
  for (int i = 0; i < 40; ++i) {
    PolyMap a = gen::tame3(r, 3), b = gen::tame3(r, 3);
    EXPECT_LE(compose(a, b).degree(), a.degree() * b.degree());
  }
}

TEST(PolyMap, EmbedKeepsOtherCoordinates) {
  PolyMap f = M({"x + y^2", "y"});
  PolyMap g = f.embed(3, {0, 2});
  EXPECT_EQ(g, M({"x + z^2", "y", "z"}));
}
