#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tamemdeg/decide3.hpp"
#include "tamemdeg/polymap.hpp"

namespace tamemdeg {

/// A factor chain F = factors[0] o factors[1] o ... (the last factor is applied first).
struct Witness {
  WitnessRecipe recipe;
  std::vector<Invertible> factors;
  PolyMap composed;
  Multidegree verified_mdeg;
  std::optional<long long> cancellation_degree;
};

/// Inverse of a tame generator: an affine automorphism, or a map whose component j is
/// a_j x_j + f_j with a_j a nonzero constant, f_j free of x_j, and acyclic dependencies
/// between components.  Returns nothing for any other map.
inline std::optional<PolyMap> tame_generator_inverse(const PolyMap& f) {
  if (is_affine_automorphism(f)) return affine_from_map(f).inverse;
  int n = f.n();
  std::vector<Rational> scale(static_cast<std::size_t>(n));
  std::vector<Polynomial> rest;
  for (int j = 0; j < n; ++j) {
    Polynomial xj = Polynomial::var(n, j);
    Rational a = f[j].coefficient(Monomial::unit(n, j));
    Polynomial r = f[j] - xj.scaled(a);
    if (a.is_zero() || r.uses_variable(j)) return std::nullopt;
    scale[static_cast<std::size_t>(j)] = a;
    rest.push_back(std::move(r));
  }
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  PolyMap inv = PolyMap::identity(n);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int j = 0; j < n && pick < 0; ++j) {
      if (done[static_cast<std::size_t>(j)]) continue;
      bool ready = true;
      for (int k = 0; k < n; ++k)
        if (!done[static_cast<std::size_t>(k)] && rest[static_cast<std::size_t>(j)].uses_variable(k)) ready = false;
      if (ready) pick = j;
    }
    if (pick < 0) return std::nullopt;
    const Polynomial& r = rest[static_cast<std::size_t>(pick)];
    inv[pick] = (Polynomial::var(n, pick) - r.substitute(inv.components()))
                    .scaled(Rational(1) / scale[static_cast<std::size_t>(pick)]);
    done[static_cast<std::size_t>(pick)] = true;
  }
  return inv;
}

inline bool is_tame_generator(const PolyMap& f) { return tame_generator_inverse(f).has_value(); }

inline Invertible certified_generator(const PolyMap& f) {
  auto inv = tame_generator_inverse(f);
  if (!inv) throw VerificationError("factor is neither affine nor triangular up to permutation");
  return {f, *inv};
}

/// Composes the factor chain, measures the multidegree and checks it against the target.
inline Witness finish_witness(WitnessRecipe recipe, std::vector<Invertible> factors,
                              std::optional<long long> cancellation = std::nullopt) {
  if (factors.empty()) throw DomainError("witness needs at least one factor");
  std::vector<PolyMap> chain;
  for (const auto& f : factors) {
    if (!is_tame_generator(f.map)) throw VerificationError("witness factor is not a tame generator");
    chain.push_back(f.map);
  }
  Witness w;
  w.composed = compose_chain(chain);
  w.verified_mdeg = mdeg(w.composed);
  if (w.verified_mdeg != recipe.target)
    throw VerificationError("witness multidegree (" + to_string(w.verified_mdeg, ",") + ") differs from target (" +
                            to_string(recipe.target, ",") + ")");
  w.recipe = std::move(recipe);
  w.factors = std::move(factors);
  w.cancellation_degree = cancellation;
  return w;
}

namespace detail {

inline Polynomial mono3(unsigned a, unsigned b, unsigned c, const Rational& coef = Rational(1)) {
  return Polynomial::monomial(Monomial{a, b, c}, coef);
}

inline Polynomial var_power(int n, int i, long long e) {
  Monomial m(n);
  m.set(i, static_cast<unsigned>(e));
  return Polynomial::monomial(m, Rational(1));
}

}  // namespace detail

/// Coefficients a_0..a_count-1 (a_0 = 1) of the power series A with A^atilde = (1+t)^btilde
/// up to t^(count-1), by forward substitution.
inline std::vector<Rational> root_series_coefficients(long long btilde, long long atilde, long long count) {
  if (atilde < 1 || btilde < 0 || count < 1) throw DomainError("root_series_coefficients: bad parameters");
  auto trunc_mul = [count](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    std::vector<Rational> r(static_cast<std::size_t>(count), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      for (std::size_t j = 0; j < q.size() && i + j < r.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
  };
  std::vector<Rational> a(static_cast<std::size_t>(count), Rational(0));
  a[0] = Rational(1);
  for (long long k = 1; k < count; ++k) {
    std::vector<Rational> partial(a.begin(), a.begin() + k);
    partial.resize(static_cast<std::size_t>(count), Rational(0));
    std::vector<Rational> pw(static_cast<std::size_t>(count), Rational(0));
    pw[0] = Rational(1);
    for (long long e = 0; e < atilde; ++e) pw = trunc_mul(pw, partial);
    Rational target(binomial(static_cast<unsigned long>(btilde), static_cast<unsigned long>(k)));
    a[static_cast<std::size_t>(k)] = (target - pw[static_cast<std::size_t>(k)]) / Rational(atilde);
  }
  return a;
}

/// F_i = x_i + prod u_j^{k_j} after the shifts x_k -> x_k + x_i^{d_k}; d_i = sum k_j d_j (j < i).
/// With d_i = 1 and no coefficients, the shifts alone realize d.  Coordinates with d_k = 1 are
/// left unshifted.
inline Witness build_sum_rule(const Multidegree& d, int i, const std::vector<long long>& coeffs) {
  int n = static_cast<int>(d.size());
  if (n < 1 || n > kMaxVars) throw DimensionError("build_sum_rule: dimension out of range");
  if (i < 0 || i >= n) throw DomainError("build_sum_rule: index out of range");
  for (long long v : d)
    if (v < 1) throw DomainError("build_sum_rule: degrees must be positive");
  if (static_cast<int>(coeffs.size()) > i) throw DomainError("build_sum_rule: coefficients only for indices below i");
  long long sum = 0;
  bool all_zero = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] < 0) throw DomainError("build_sum_rule: coefficients must be nonnegative");
    if (coeffs[j] != 0) all_zero = false;
    sum += coeffs[j] * d[j];
  }
  bool degenerate = all_zero && d[static_cast<std::size_t>(i)] == 1;
  if (!degenerate && sum != d[static_cast<std::size_t>(i)]) throw DomainError("build_sum_rule: identity d_i = sum k_j d_j violated");

  WitnessRecipe r;
  r.kind = RecipeKind::SumRule;
  r.target = d;
  r.index = i;
  r.coeffs = coeffs;
  std::vector<Invertible> factors;
  if (!degenerate) {
    Polynomial prod = Polynomial::constant(n, Rational(1));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] > 0) prod *= detail::var_power(n, static_cast<int>(j), coeffs[j]);
    factors.push_back(elementary(n, i, prod));
  }
  for (int k = 0; k < n; ++k)
    if (k != i && d[static_cast<std::size_t>(k)] > 1)
      factors.push_back(elementary(n, k, detail::var_power(n, i, d[static_cast<std::size_t>(k)])));
  if (factors.empty()) factors.push_back({PolyMap::identity(n), PolyMap::identity(n)});
  return finish_witness(std::move(r), std::move(factors));
}

/// Embeds an m-dimensional witness on the given positions of n-space; every other coordinate
/// becomes x_k + x_{i1}^{d_k}, with i1 the first embedded position.
inline Witness build_padding(const Witness& sub, const std::vector<int>& positions, const Multidegree& target) {
  int n = static_cast<int>(target.size());
  int m = sub.composed.n();
  if (static_cast<int>(positions.size()) != m) throw DimensionError("build_padding: position count differs from sub-witness");
  if (m >= n) throw DimensionError("build_padding: sub-witness must live in a smaller space");
  for (std::size_t l = 0; l < positions.size(); ++l) {
    if (positions[l] < 0 || positions[l] >= n || (l > 0 && positions[l] <= positions[l - 1]))
      throw DomainError("build_padding: positions must be increasing and in range");
    if (sub.verified_mdeg[l] != target[static_cast<std::size_t>(positions[l])])
      throw DomainError("build_padding: sub-witness degree differs from target at an embedded position");
  }
  for (long long v : target)
    if (v < 1) throw DomainError("build_padding: degrees must be positive");
  WitnessRecipe r;
  r.kind = RecipeKind::Padding;
  r.target = target;
  r.positions = positions;
  r.sub = std::make_shared<WitnessRecipe>(sub.recipe);
  std::vector<Invertible> factors;
  for (const auto& f : sub.factors) factors.push_back({f.map.embed(n, positions), f.inverse.embed(n, positions)});
  int i1 = positions[0];
  for (int k = 0; k < n; ++k) {
    if (std::find(positions.begin(), positions.end(), k) != positions.end()) continue;
    factors.push_back(elementary(n, k, detail::var_power(n, i1, target[static_cast<std::size_t>(k)])));
  }
  return finish_witness(std::move(r), std::move(factors));
}

/// (4, 6, 9+4k) for variant 9 and (4, 6, 7+4k) for variant 7.
inline Witness build_469_family(long long k, long long variant) {
  if (k < 0) throw DomainError("build_469_family: k must be nonnegative");
  if (variant != 9 && variant != 7) throw DomainError("build_469_family: variant must be 9 or 7");
  using detail::mono3;
  Polynomial shift_y = mono3(0, 0, 6);
  if (variant == 7) shift_y += mono3(1, 0, 2, Rational(3, 2));
  Polynomial u = mono3(1, 0, 0) + mono3(0, 0, 4);
  Polynomial v = mono3(0, 1, 0) + shift_y;
  long long cancel = (v * v - u.pow(3)).degree().value();
  Polynomial corr = (mono3(0, 2, 0) - mono3(3, 0, 0)) * mono3(static_cast<unsigned>(k), 0, 0);
  WitnessRecipe r;
  r.kind = RecipeKind::Ex469family;
  r.target = {4, 6, variant + 4 * k};
  r.k = k;
  r.variant = variant;
  std::vector<Invertible> factors = {elementary(3, 2, corr), elementary(3, 0, mono3(0, 0, 4)),
                                     elementary(3, 1, shift_y)};
  if (cancel != variant) throw VerificationError("build_469_family: cancellation degree differs from the variant");
  return finish_witness(std::move(r), std::move(factors), cancel);
}

namespace detail {

/// Shared shape of the tail constructions: F = (x + z^a, y + z^p + sum c_l x^l z^{b-la}, z) and
/// G = (u, v, w + (u^bt - v^at) u^q).  Returns the witness factors and the cancellation degree.
inline std::pair<std::vector<Invertible>, long long> tail_factors(long long a, long long b, long long p, long long q,
                                                                  const std::vector<Rational>& c) {
  long long g = std::gcd(a, b), at = a / g, bt = b / g;
  Polynomial shift_y = mono3(0, 0, static_cast<unsigned>(p));
  for (std::size_t l = 0; l < c.size(); ++l)
    shift_y += mono3(static_cast<unsigned>(l), 0, static_cast<unsigned>(b - static_cast<long long>(l) * a), c[l]);
  Polynomial shift_x = mono3(0, 0, static_cast<unsigned>(a));
  Polynomial u = mono3(1, 0, 0) + shift_x;
  Polynomial v = mono3(0, 1, 0) + shift_y;
  long long cancel = (u.pow(static_cast<unsigned>(bt)) - v.pow(static_cast<unsigned>(at))).degree().value();
  Polynomial corr = (mono3(static_cast<unsigned>(bt), 0, 0) - mono3(0, static_cast<unsigned>(at), 0)) *
                    mono3(static_cast<unsigned>(q), 0, 0);
  return {{elementary(3, 2, corr), elementary(3, 0, shift_x), elementary(3, 1, shift_y)}, cancel};
}

}  // namespace detail

/// (4, 4k+2, d3) for k >= 3 and d3 >= 5k+1, with the smallest r in {k-1..k+2} such that
/// d3 = 4k+2+r+4q.
inline Witness build_4k2(long long k, long long d3) {
  if (k < 3) throw DomainError("build_4k2: need k >= 3");
  if (d3 < 5 * k + 1) throw DomainError("build_4k2: need d3 >= 5k+1");
  long long r = -1, q = -1;
  for (long long cand = k - 1; cand <= k + 2; ++cand) {
    long long rest = d3 - (4 * k + 2) - cand;
    if (rest >= 0 && rest % 4 == 0) {
      r = cand;
      q = rest / 4;
      break;
    }
  }
  if (r < 0) throw DomainError("build_4k2: no decomposition d3 = 4k+2+r+4q");
  std::vector<Rational> c = root_series_coefficients(2 * k + 1, 2, k + 1);
  auto [factors, cancel] = detail::tail_factors(4, 4 * k + 2, r, q, c);
  if (cancel != 4 * k + 2 + r) throw VerificationError("build_4k2: cancellation degree is not 4k+2+r");
  WitnessRecipe rec;
  rec.kind = RecipeKind::FourK2;
  rec.target = {4, 4 * k + 2, d3};
  rec.k = k;
  return finish_witness(std::move(rec), std::move(factors), cancel);
}

/// Parameters of the tail construction for (a, b, d3): p, q and the cancellation degree p + b(at-1).
struct TailParameters {
  long long p = 0;
  long long q = 0;
  long long cancellation = 0;
};

inline TailParameters tab_tail_parameters(long long a, long long b, long long d3) {
  if (!(1 < a && a < b)) throw DomainError("build_tab_tail: need 1 < a < b");
  long long start = tab_tail_start(a, b);
  if (d3 < start) throw DomainError("build_tab_tail: d3 = " + std::to_string(d3) + " lies below the tail start " +
                                    std::to_string(start));
  long long at = a / std::gcd(a, b);
  for (long long c = start; c < start + a; ++c) {
    if ((d3 - c) % a != 0) continue;
    long long p = c - b * (at - 1);
    if (p < 1 || p > b - 1) break;
    return {p, (d3 - c) / a, c};
  }
  throw DomainError("build_tab_tail: no admissible p");
}

inline Witness build_tab_tail(long long a, long long b, long long d3) {
  TailParameters tp = tab_tail_parameters(a, b, d3);
  long long g = std::gcd(a, b);
  std::vector<Rational> c = root_series_coefficients(b / g, a / g, b / a + 1);
  auto [factors, cancel] = detail::tail_factors(a, b, tp.p, tp.q, c);
  if (cancel != tp.cancellation) throw VerificationError("build_tab_tail: cancellation degree is not p + b(at-1)");
  WitnessRecipe rec;
  rec.kind = RecipeKind::TabTail;
  rec.target = {a, b, d3};
  return finish_witness(std::move(rec), std::move(factors), cancel);
}

/// The gallery map su_example with its components reordered to multidegree (6, 8, 9).
inline Witness build_gallery(const std::string& name) {
  if (name != "su_example") throw DomainError("no gallery witness named '" + name + "'");
  std::vector<Invertible> factors;
  factors.push_back(certified_generator(PolyMap::parse({"y", "z", "x"}, {"x", "y", "z"})));
  for (const char* f : {"su_l", "su_t3", "su_t2", "su_t1"}) factors.push_back(certified_generator(gallery(f)));
  WitnessRecipe r;
  r.kind = RecipeKind::Gallery;
  r.target = {6, 8, 9};
  r.name = name;
  return finish_witness(std::move(r), std::move(factors));
}

/// Rebuilds the witness a recipe describes and verifies its multidegree.
inline Witness build(const WitnessRecipe& recipe) {
  auto expect_target = [&](Witness w) {
    if (w.verified_mdeg != recipe.target)
      throw VerificationError("recipe target (" + to_string(recipe.target, ",") + ") differs from the built witness");
    w.recipe = recipe;
    return w;
  };
  const Multidegree& t = recipe.target;
  switch (recipe.kind) {
    case RecipeKind::SumRule:
    case RecipeKind::Gcd2:
      return expect_target(build_sum_rule(t, recipe.index, recipe.coeffs));
    case RecipeKind::Padding: {
      if (!recipe.sub) throw DomainError("padding recipe lacks a sub-recipe");
      return expect_target(build_padding(build(*recipe.sub), recipe.positions, t));
    }
    case RecipeKind::Ex469family:
      return expect_target(build_469_family(recipe.k, recipe.variant));
    case RecipeKind::Ex4610family:
      if (t.size() != 3 || t[0] != 4 || t[1] != 10) throw DomainError("Ex4610family recipe needs target (4,10,d3)");
      return expect_target(build_tab_tail(4, 10, t[2]));
    case RecipeKind::FourK2:
      if (t.size() != 3) throw DomainError("FourK2 recipe needs a triple");
      return expect_target(build_4k2(recipe.k, t[2]));
    case RecipeKind::TabTail:
      if (t.size() != 3) throw DomainError("TabTail recipe needs a triple");
      return expect_target(build_tab_tail(t[0], t[1], t[2]));
    case RecipeKind::Gallery:
      return expect_target(build_gallery(recipe.name));
  }
  throw DomainError("unknown recipe kind");
}

}  // namespace tamemdeg
