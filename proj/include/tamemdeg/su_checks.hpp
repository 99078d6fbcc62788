#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tamemdeg/bracket.hpp"
#include "tamemdeg/polymap.hpp"

namespace tamemdeg {

/// G(X, Y) with X standing for F_j and Y for F_k, where j < k are the two indices other than target_index.
struct ReductionCandidate {
  int target_index = 0;  // 0-based
  Polynomial g{2};
};

struct ReductionCheck {
  bool reduces = false;
  Degree achieved;
};

inline std::pair<int, int> partner_indices(int i) {
  if (i < 0 || i > 2) throw DomainError("target index must be 1, 2 or 3");
  return i == 0 ? std::pair{1, 2} : i == 1 ? std::pair{0, 2} : std::pair{0, 1};
}

/// deg(F_i - G(F_j, F_k)) and whether it is strictly below deg F_i.
inline ReductionCheck check_elementary_reduction(const PolyMap& f, const ReductionCandidate& c) {
  if (f.n() != 3) throw DimensionError("check_elementary_reduction: map must have 3 components");
  if (c.g.n() != 2) throw DimensionError("check_elementary_reduction: candidate must be bivariate");
  auto [j, k] = partner_indices(c.target_index);
  Polynomial rest = f[c.target_index] - c.g.substitute({f[j], f[k]});
  ReductionCheck r;
  r.achieved = rest.degree();
  r.reduces = r.achieved < f[c.target_index].degree();
  return r;
}

namespace detail {

/// Exact row reduction that accepts equations one at a time.  Each equation is a vector of
/// coefficients for the unknowns followed by the right-hand side.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(std::size_t unknowns) : cols_(unknowns) {}

  /// Returns false when the equation contradicts the ones already added.
  bool add(std::vector<Rational> row) {
    for (const auto& [pivot, basis] : rows_) {
      if (row[pivot].is_zero()) continue;
      Rational f = row[pivot];
      for (std::size_t c = 0; c <= cols_; ++c)
        if (!basis[c].is_zero()) row[c] -= f * basis[c];
    }
    std::size_t pivot = 0;
    while (pivot < cols_ && row[pivot].is_zero()) ++pivot;
    if (pivot == cols_) return row[cols_].is_zero();
    Rational s = Rational(1) / row[pivot];
    for (auto& v : row) v *= s;
    for (auto& [p, basis] : rows_) {
      if (basis[pivot].is_zero()) continue;
      Rational f = basis[pivot];
      for (std::size_t c = 0; c <= cols_; ++c)
        if (!row[c].is_zero()) basis[c] -= f * row[c];
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  bool full_rank() const { return rows_.size() == cols_; }

  /// A solution with every free unknown set to zero.
  std::vector<Rational> solution() const {
    std::vector<Rational> x(cols_, Rational(0));
    for (const auto& [pivot, basis] : rows_) x[pivot] = basis[cols_];
    return x;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Rational>> rows_;
};

}  // namespace detail

/// Looks for G with deg_Y G <= degY_bound and deg G <= deg_bound such that F_i - G(F_j, F_k) has
/// degree below deg F_i.  Y is the variable mapped to the partner of larger degree (the second
/// partner on ties).  When the partners have different degrees and satisfy the hypotheses of the
/// lower bound, deg_Y classes whose bound exceeds deg F_i are skipped.  The verdict is only
/// "found" or "not found within these bounds".
inline std::optional<ReductionCandidate> bounded_reduction_search(const PolyMap& f, int i, long long degY_bound,
                                                                  long long deg_bound) {
  if (f.n() != 3) throw DimensionError("bounded_reduction_search: map must have 3 components");
  if (degY_bound <= 0 || deg_bound <= 0) throw DomainError("bounded_reduction_search: bounds must be positive");
  auto [j, k] = partner_indices(i);
  const Polynomial& target = f[i];
  if (target.is_constant() || f[j].is_constant() || f[k].is_constant()) return std::nullopt;
  long long D = target.degree().value();
  bool k_is_high = f[k].degree() >= f[j].degree();
  const Polynomial& lo = k_is_high ? f[j] : f[k];
  const Polynomial& hi = k_is_high ? f[k] : f[j];
  long long dlo = lo.degree().value(), dhi = hi.degree().value();

  long long ymax = degY_bound;
  if (dlo < dhi) {
    Degree br = poisson_degree(lo, hi);
    Polynomial lb = lo.leading_form(), hb = hi.leading_form();
    bool hyp = !br.is_neg_inf() && !is_power_proportional(lb, hb) && !is_power_proportional(hb, lb);
    if (hyp) {
      long long allowed = -1;
      for (long long m = 0; m <= degY_bound; ++m)
        if (su_lower_bound(dlo, dhi, br.value(), m) <= D) allowed = m;
      ymax = allowed;
    }
  }
  if (ymax < 0) return std::nullopt;

  // Monomials lo^a hi^b of weight below D cannot touch the top part; with independent leading
  // forms the weight of G(lo, hi) is exact, so weights above D are impossible as well.
  bool forms_independent = !poisson_degree(lo.leading_form(), hi.leading_form()).is_neg_inf();
  std::vector<std::pair<long long, long long>> unknowns;
  for (long long b = 0; b <= ymax; ++b)
    for (long long a = 0; a + b <= deg_bound; ++a) {
      long long w = a * dlo + b * dhi;
      if (w < D) continue;
      if (forms_independent && w > D) continue;
      unknowns.push_back({a, b});
    }
  if (unknowns.empty()) return std::nullopt;

  // Top part (degree >= D) of each lo^a hi^b, gathered per monomial.
  std::map<Monomial, std::vector<Rational>, bool (*)(const Monomial&, const Monomial&)> eqs(
      [](const Monomial& x, const Monomial& y) { return grlex_less(y, x); });
  std::size_t cols = unknowns.size();
  auto row_for = [&](const Monomial& m) -> std::vector<Rational>& {
    auto it = eqs.find(m);
    if (it == eqs.end()) it = eqs.emplace(m, std::vector<Rational>(cols + 1, Rational(0))).first;
    return it->second;
  };
  std::map<long long, Polynomial> lo_pow, hi_pow;
  auto power = [](std::map<long long, Polynomial>& cache, const Polynomial& base, long long e) -> const Polynomial& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, base.pow(static_cast<unsigned>(e))).first->second;
  };
  for (std::size_t c = 0; c < cols; ++c) {
    auto [a, b] = unknowns[c];
    Polynomial p = power(lo_pow, lo, a) * power(hi_pow, hi, b);
    for (const auto& t : p.terms()) {
      if (static_cast<long long>(t.m.degree()) < D) break;
      row_for(t.m)[c] += t.c;
    }
  }
  for (const auto& t : target.terms()) {
    if (static_cast<long long>(t.m.degree()) < D) break;
    row_for(t.m)[cols] += t.c;
  }

  detail::IncrementalSolver solver(cols);
  for (auto& [m, row] : eqs)
    if (!solver.add(row)) return std::nullopt;
  std::vector<Rational> x = solver.solution();

  ReductionCandidate cand;
  cand.target_index = i;
  Polynomial g(2);
  for (std::size_t c = 0; c < cols; ++c) {
    if (x[c].is_zero()) continue;
    auto [a, b] = unknowns[c];
    unsigned ex = static_cast<unsigned>(k_is_high ? a : b), ey = static_cast<unsigned>(k_is_high ? b : a);
    g += Polynomial::monomial(Monomial{ex, ey}, x[c]);
  }
  cand.g = g;
  if (!check_elementary_reduction(f, cand).reduces) return std::nullopt;
  return cand;
}

/// Necessary shape of a multidegree admitting a type III reduction: d2 = 2n and either
/// d3 = 3n with n < d1 <= 3n/2, or 5n/2 < d3 <= 3n with d1 = 3n/2.
inline bool type3_shape(long long d1, long long d2, long long d3) {
  Multidegree s = sorted({d1, d2, d3});
  d1 = s[0];
  d2 = s[1];
  d3 = s[2];
  if (d1 < 1 || d2 % 2 != 0) return false;
  long long n = d2 / 2;
  bool first = d3 == 3 * n && n < d1 && 2 * d1 <= 3 * n;
  bool second = 5 * n < 2 * d3 && d3 <= 3 * n && 2 * d1 == 3 * n;
  return first || second;
}

}  // namespace tamemdeg
