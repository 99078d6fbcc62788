#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "tamemdeg/decide3.hpp"

using namespace tamemdeg;

TEST(Decide3, Examples) {
  Classification c = classify(3, 4, 5);
  EXPECT_EQ(c.status, Status::NotRealizable);
  EXPECT_EQ(c.rule_id, "R5");
  c = classify(5, 6, 9);
  EXPECT_EQ(c.status, Status::NotRealizable);
  EXPECT_EQ(c.rule_id, "R7");
  EXPECT_EQ(c.rule, "Thm (5,6,9)");
  c = classify(5, 7, 23);
  EXPECT_EQ(c.status, Status::NotRealizable);
  EXPECT_EQ(c.rule_id, "R8");
  c = classify(5, 7, 24);
  EXPECT_EQ(c.status, Status::Realizable);
  EXPECT_EQ(c.rule_id, "R3");
  c = classify(2, 100, 10001);
  EXPECT_EQ(c.status, Status::Realizable);
  EXPECT_EQ(c.rule_id, "R2");
  c = classify(4, 6, 9);
  EXPECT_EQ(c.status, Status::Realizable);
  ASSERT_TRUE(c.witness_recipe.has_value());
  EXPECT_EQ(c.witness_recipe->kind, RecipeKind::Ex469family);
  c = classify(37, 70, 105);
  EXPECT_EQ(c.status, Status::ConditionalOnJC2);
  EXPECT_EQ(c.rule_id, "R9");
  c = classify(4, 9, 10);
  EXPECT_EQ(c.status, Status::Unknown);
  EXPECT_EQ(c.rule, "(4,4k+1,4k+2) open");
  c = classify(1, 5, 9);
  EXPECT_EQ(c.status, Status::Realizable);
  EXPECT_EQ(c.rule_id, "R1");
  EXPECT_THROW(classify(0, 1, 2), DomainError);
}

TEST(Decide3, ExceptionalFamilyAndOpenCases) {
  EXPECT_EQ(classify(7, 10, 15).status, Status::NotRealizable);
  EXPECT_EQ(classify(7, 10, 15).rule_id, "R9");
  EXPECT_EQ(classify(31, 58, 87).status, Status::NotRealizable);
  EXPECT_EQ(classify(41, 78, 117).status, Status::ConditionalOnJC2);
  EXPECT_EQ(classify(7, 8, 12).status, Status::Unknown);
  EXPECT_EQ(classify(4, 14, 15).status, Status::Unknown);
  EXPECT_EQ(classify(4, 14, 17).status, Status::Realizable);
  EXPECT_EQ(classify(4, 14, 17).witness_recipe->kind, RecipeKind::FourK2);
}

TEST(Decide3, OriginalOrderIsRetained) {
  Classification c = classify(9, 5, 6);
  EXPECT_EQ(c.input, (Multidegree{9, 5, 6}));
  EXPECT_EQ(c.sorted_mdeg, (Multidegree{5, 6, 9}));
}

TEST(Decide3, PermutationInvariance) {
  gen::Rng r(401);
  for (int i = 0; i < 1000; ++i) {
    Multidegree d{r.uniform(1, 60), r.uniform(1, 60), r.uniform(1, 60)};
    Classification base = classify(d);
    std::sort(d.begin(), d.end());
    do {
      Classification c = classify(d);
      EXPECT_EQ(c.status, base.status);
      EXPECT_EQ(c.rule_id, base.rule_id);
      EXPECT_EQ(c.rule, base.rule);
      EXPECT_EQ(c.notes, base.notes);
    } while (std::next_permutation(d.begin(), d.end()));
  }
}

TEST(Decide3, SmallBoundEnumeration) {
  Enumeration e = enumerate(3);
  EXPECT_EQ(e.results.size(), 10u);
  for (const auto& c : e.results) EXPECT_EQ(c.status, Status::Realizable);
  EXPECT_EQ(e.counts[Status::Realizable], 10);
}

TEST(Decide3, BoundNineNonRealizableWithFive) {
  std::set<Multidegree> found;
  for (const auto& c : enumerate(9).results)
    if (c.sorted_mdeg[0] == 5 && c.status == Status::NotRealizable) found.insert(c.sorted_mdeg);
  std::set<Multidegree> expected{{5, 6, 7}, {5, 6, 8}, {5, 6, 9}, {5, 7, 8}, {5, 7, 9}, {5, 8, 9}};
  EXPECT_EQ(found, expected);
}

TEST(Decide3, ParallelEnumerationIsDeterministic) {
  Enumeration a = enumerate(25, 1), b = enumerate(25, 3);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].sorted_mdeg, b.results[i].sorted_mdeg);
    EXPECT_EQ(a.results[i].status, b.results[i].status);
    EXPECT_EQ(a.results[i].rule_id, b.results[i].rule_id);
  }
  EXPECT_EQ(a.counts, b.counts);
}

TEST(Decide3, DegreeThreeMatchesIndependentFormula) {
  for (long long d2 = 3; d2 <= 40; ++d2)
    for (long long d3 = d2; d3 <= 40; ++d3) {
      Status expected = oracle::three_rule_realizable(d2, d3) ? Status::Realizable : Status::NotRealizable;
      EXPECT_EQ(classify(3, d2, d3).status, expected) << d2 << " " << d3;
    }
}

TEST(Decide3, StatusMatchesRecipePresence) {
  for (const auto& c : enumerate(30).results) {
    EXPECT_EQ(c.status == Status::Realizable, c.witness_recipe.has_value()) << to_string(c.sorted_mdeg);
    EXPECT_FALSE(c.rule.empty());
  }
}

TEST(Decide3, SumRuleIsClosedUnderAddingSmallestDegree) {
  for (const auto& c : enumerate(30).results) {
    if (c.rule_id != "R3") continue;
    const Multidegree& d = c.sorted_mdeg;
    EXPECT_EQ(classify(d[0], d[1], d[2] + d[0]).status, Status::Realizable) << to_string(d);
  }
}

TEST(Decide3, NegativeVerdictsLieBelowFrobenius) {
  for (const auto& c : enumerate(40).results) {
    if (c.status != Status::NotRealizable) continue;
    if (c.rule_id != "R5" && c.rule_id != "R8" && c.rule_id != "R10") continue;
    const Multidegree& d = c.sorted_mdeg;
    ASSERT_EQ(std::gcd(d[0], d[1]), 1) << to_string(d);
    EXPECT_LE(d[2], frobenius({d[0], d[1]})) << to_string(d);
    EXPECT_FALSE(oracle::in_semigroup(d[0], d[1], d[2]));
  }
}

TEST(Decide3, NotesListLaterRules) {
  Classification c = classify(4, 6, 9);
  ASSERT_FALSE(c.notes.empty());
  EXPECT_EQ(c.notes.front(), "R12 also applies: finite tail");
  EXPECT_EQ(status_from_string("ConditionalOnJC2"), Status::ConditionalOnJC2);
  EXPECT_THROW(status_from_string("maybe"), DomainError);
  EXPECT_EQ(recipe_kind_from_string("TabTail"), RecipeKind::TabTail);
}
