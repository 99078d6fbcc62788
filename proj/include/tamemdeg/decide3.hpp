#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tamemdeg/numsg.hpp"
#include "tamemdeg/polymap.hpp"

namespace tamemdeg {

enum class Status { Realizable, NotRealizable, Unknown, ConditionalOnJC2 };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Realizable: return "Realizable";
    case Status::NotRealizable: return "NotRealizable";
    case Status::Unknown: return "Unknown";
    case Status::ConditionalOnJC2: return "ConditionalOnJC2";
  }
  return "?";
}

inline Status status_from_string(const std::string& s) {
  if (s == "Realizable") return Status::Realizable;
  if (s == "NotRealizable") return Status::NotRealizable;
  if (s == "Unknown") return Status::Unknown;
  if (s == "ConditionalOnJC2") return Status::ConditionalOnJC2;
  throw DomainError("unknown status '" + s + "'");
}

enum class RecipeKind { SumRule, Padding, Gcd2, Ex469family, Ex4610family, FourK2, TabTail, Gallery };

inline const char* to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::SumRule: return "SumRule";
    case RecipeKind::Padding: return "Padding";
    case RecipeKind::Gcd2: return "Gcd2";
    case RecipeKind::Ex469family: return "Ex469family";
    case RecipeKind::Ex4610family: return "Ex4610family";
    case RecipeKind::FourK2: return "FourK2";
    case RecipeKind::TabTail: return "TabTail";
    case RecipeKind::Gallery: return "Gallery";
  }
  return "?";
}

inline RecipeKind recipe_kind_from_string(const std::string& s) {
  for (auto k : {RecipeKind::SumRule, RecipeKind::Padding, RecipeKind::Gcd2, RecipeKind::Ex469family,
                 RecipeKind::Ex4610family, RecipeKind::FourK2, RecipeKind::TabTail, RecipeKind::Gallery})
    if (s == to_string(k)) return k;
  throw DomainError("unknown recipe kind '" + s + "'");
}

/// Everything needed to rebuild a witness deterministically.
///   SumRule/Gcd2: index (0-based), coeffs.   Ex469family: k, variant (9 or 7).
///   Ex4610family, FourK2, TabTail: the target alone (parameters are derived).
///   Padding: positions (0-based) and sub.      Gallery: name.
struct WitnessRecipe {
  RecipeKind kind = RecipeKind::SumRule;
  Multidegree target;
  int index = 0;
  std::vector<long long> coeffs;
  long long k = 0;
  long long variant = 0;
  std::vector<int> positions;
  std::shared_ptr<WitnessRecipe> sub;
  std::string name;
};

struct Classification {
  Multidegree input;
  Multidegree sorted_mdeg;
  Status status = Status::Unknown;
  std::string rule_id;
  std::string rule;
  std::optional<WitnessRecipe> witness_recipe;
  std::vector<std::string> notes;
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Sum-rule data for a sorted triple, preferring d2 in d1 N, then d3 in d1 N + d2 N.
inline std::optional<WitnessRecipe> find_sum_rule(const Multidegree& d) {
  WitnessRecipe r;
  r.kind = RecipeKind::SumRule;
  r.target = d;
  if (d[1] % d[0] == 0) {
    r.index = 1;
    r.coeffs = {d[1] / d[0]};
    return r;
  }
  if (auto m = member(SemigroupPair(d[0], d[1]), d[2])) {
    r.index = 2;
    r.coeffs = {m->k1, m->k2};
    return r;
  }
  return std::nullopt;
}

/// First d3 covered by the tail construction for (a, b): lcm(a,b) - min{b-1, (a-1)(floor(b/a)+1)}.
inline long long tab_tail_start(long long a, long long b) {
  long long r = std::min(b - 1, (a - 1) * (b / a + 1));
  return std::lcm(a, b) - r;
}

namespace detail {

inline bool exceptional_family(long long d1, long long d2, long long d3) {
  return is_prime(d1) && d1 >= 5 && d2 == 2 * (d1 - 2) && d3 == 3 * (d1 - 2);
}

inline bool prime_rule_applies(long long p, long long d2, long long d3) {
  if (!is_prime(p) || p < 5) return false;
  if (2 * d3 != 3 * d2) return true;
  return d2 > 2 * (p - 2);
}

}  // namespace detail

/// Verdict on whether a triple is the multidegree of a tame automorphism of C^3.
/// Rules are tried in the fixed order R1..R13; notes list every rule that applies.
inline Classification classify(long long a, long long b, long long c) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("classify: degrees must be positive");
  Classification out;
  out.input = {a, b, c};
  out.sorted_mdeg = sorted(out.input);
  const long long d1 = out.sorted_mdeg[0], d2 = out.sorted_mdeg[1], d3 = out.sorted_mdeg[2];
  const Multidegree& d = out.sorted_mdeg;
  const bool in_semigroup = member(SemigroupPair(d1, d2), d3).has_value();
  const bool sum_rule = d2 % d1 == 0 || in_semigroup;
  const long long g3 = std::gcd(std::gcd(d1, d2), d3);

  bool decided = false;
  auto decide = [&](Status s, const char* id, std::string rule, std::optional<WitnessRecipe> recipe = std::nullopt) {
    if (decided) {
      out.notes.push_back(std::string(id) + " also applies: " + rule);
      return;
    }
    decided = true;
    out.status = s;
    out.rule_id = id;
    out.rule = std::move(rule);
    out.witness_recipe = std::move(recipe);
  };

  if (d1 == 1) {
    WitnessRecipe r;
    r.kind = RecipeKind::SumRule;
    r.target = d;
    r.index = 0;
    decide(Status::Realizable, "R1", "d1 = 1", r);
  }
  if (d1 <= 2) decide(Status::Realizable, "R2", "d1 <= 2", find_sum_rule(d));
  if (sum_rule) decide(Status::Realizable, "R3", "sum rule", find_sum_rule(d));
  if (d1 / g3 <= 2) {
    auto r = find_sum_rule(d);
    if (r) r->kind = RecipeKind::Gcd2;
    decide(Status::Realizable, "R4", "gcd rule", r);
  }
  if (d1 == 3) {
    if (sum_rule) decide(Status::Realizable, "R5", "Thm d1 = 3", find_sum_rule(d));
    else decide(Status::NotRealizable, "R5", "Thm d1 = 3");
  }
  if (d1 == 4) {
    bool e2 = d2 % 2 == 0, e3 = d3 % 2 == 0;
    if (e2 && e3) {
      decide(Status::Realizable, "R6", "Thm d1 = 4 even/even", find_sum_rule(d));
    } else if (!e2 && !e3) {
      if (in_semigroup) decide(Status::Realizable, "R6", "Thm d1 = 4 odd/odd", find_sum_rule(d));
      else decide(Status::NotRealizable, "R6", "Thm d1 = 4 odd/odd");
    } else if (!e2 && e3 && d3 - d2 != 1) {
      if (in_semigroup) decide(Status::Realizable, "R6", "Thm d1 = 4 odd/even", find_sum_rule(d));
      else decide(Status::NotRealizable, "R6", "Thm d1 = 4 odd/even");
    } else if (!e2 && e3) {
      if (d2 % 4 == 1) decide(Status::Unknown, "R6", "(4,4k+1,4k+2) open");
      else decide(Status::Realizable, "R6", "sum rule", find_sum_rule(d));
    } else if (d2 % 4 == 0) {
      decide(Status::Realizable, "R6", "(4,4k,d3)", find_sum_rule(d));
    } else if (d2 == 6) {
      WitnessRecipe r;
      r.kind = RecipeKind::Ex469family;
      r.target = d;
      r.variant = (d3 - 9) % 4 == 0 ? 9 : 7;
      r.k = (d3 - r.variant) / 4;
      decide(Status::Realizable, "R6", "(4,6,d3)", r);
    } else if (d2 == 10) {
      WitnessRecipe r;
      r.kind = RecipeKind::Ex4610family;
      r.target = d;
      decide(Status::Realizable, "R6", "(4,10,d3)", r);
    } else {
      long long k = (d2 - 2) / 4;
      if (k >= 3 && d3 >= 5 * k + 1) {
        WitnessRecipe r;
        r.kind = RecipeKind::FourK2;
        r.target = d;
        r.k = k;
        decide(Status::Realizable, "R6", "(4,4k+2,d3 >= 5k+1)", r);
      } else {
        decide(Status::Unknown, "R6", "(4,4k+2,d3 < 5k+1) open");
      }
    }
  }
  if (d1 == 5 && d2 == 6 && d3 == 9) decide(Status::NotRealizable, "R7", "Thm (5,6,9)");
  if (detail::prime_rule_applies(d1, d2, d3)) {
    if (sum_rule) decide(Status::Realizable, "R8", "Thm prime d1", find_sum_rule(d));
    else decide(Status::NotRealizable, "R8", "Thm prime d1");
    if (d1 == 11) out.notes.push_back("for d1 = 11 the divisibility condition is read as 11 | d2");
  }
  if (detail::exceptional_family(d1, d2, d3)) {
    if (d1 <= 35) {
      decide(Status::NotRealizable, "R9", "Thm (p,2(p-2),3(p-2))");
      out.notes.push_back("the third entry of the exceptional family is taken as 3(p-2)");
    } else {
      decide(Status::ConditionalOnJC2, "R9", "Thm (p,2(p-2),3(p-2))");
      out.notes.push_back("realizability would refute JC2");
    }
  }
  if (d1 % 2 == 1 && d2 % 2 == 1 && d1 >= 3 && d2 > d1 && std::gcd(d1, d2) == 1) {
    if (in_semigroup) decide(Status::Realizable, "R10", "Thm odd coprime", find_sum_rule(d));
    else decide(Status::NotRealizable, "R10", "Thm odd coprime");
  }
  if (is_prime(d1) && is_prime(d2) && d1 >= 3 && d2 > d1) {
    if (in_semigroup) decide(Status::Realizable, "R11", "Thm odd primes", find_sum_rule(d));
    else decide(Status::NotRealizable, "R11", "Thm odd primes");
  }
  if (1 < d1 && d1 < d2 && d3 >= tab_tail_start(d1, d2)) {
    WitnessRecipe r;
    r.kind = RecipeKind::TabTail;
    r.target = d;
    decide(Status::Realizable, "R12", "finite tail", r);
  }
  if (d == Multidegree{6, 8, 9}) {
    WitnessRecipe r;
    r.kind = RecipeKind::Gallery;
    r.target = d;
    r.name = "su_example";
    decide(Status::Realizable, "R13", "gallery su_example", r);
  }
  if (!decided) {
    out.status = Status::Unknown;
    out.rule_id = "none";
    out.rule = "no rule applies";
  }
  return out;
}

inline Classification classify(const Multidegree& d) {
  if (d.size() != 3) throw DomainError("classify: need exactly three degrees");
  return classify(d[0], d[1], d[2]);
}

struct Enumeration {
  std::vector<Classification> results;
  std::map<Status, long long> counts;
};

/// Every sorted triple with d3 <= bound, in lexicographic order, classified on `jobs` workers.
inline Enumeration enumerate(long long bound, int jobs = 1) {
  if (bound < 1) throw DomainError("enumerate: bound must be >= 1");
  std::vector<std::array<long long, 3>> triples;
  for (long long a = 1; a <= bound; ++a)
    for (long long b = a; b <= bound; ++b)
      for (long long c = b; c <= bound; ++c) triples.push_back({a, b, c});
  Enumeration e;
  e.results.resize(triples.size());
  jobs = std::max(1, jobs);
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < triples.size(); i += static_cast<std::size_t>(jobs))
      e.results[i] = classify(triples[i][0], triples[i][1], triples[i][2]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
    for (auto& t : pool) t.join();
  }
  for (auto s : {Status::Realizable, Status::NotRealizable, Status::Unknown, Status::ConditionalOnJC2})
    e.counts[s] = 0;
  for (const auto& c : e.results) ++e.counts[c.status];
  return e;
}

}  // namespace tamemdeg
