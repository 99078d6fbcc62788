#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tamemdeg/errors.hpp"
#include "tamemdeg/rational.hpp"

namespace tamemdeg {

inline constexpr int kMaxVars = 9;
inline constexpr std::size_t kDenseBoxLimit = std::size_t{1} << 22;

/// Total degree of a polynomial; the zero polynomial has degree -infinity.
class Degree {
 public:
  static constexpr long long kNegInf = std::numeric_limits<long long>::min();

  constexpr Degree() = default;
  constexpr Degree(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  long long value() const {
    if (is_neg_inf()) throw DomainError("degree of the zero polynomial is -inf");
    return v_;
  }
  std::string str() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

  friend constexpr bool operator==(Degree a, Degree b) = default;
  friend constexpr auto operator<=>(Degree a, Degree b) = default;

 private:
  long long v_ = kNegInf;
};

inline Degree operator+(Degree a, Degree b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Degree::neg_inf();
  return Degree(a.value() + b.value());
}

/// Exponent vector of fixed length n (the ambient variable count).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxVars) throw DimensionError("variable count out of range: " + std::to_string(n));
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(static_cast<int>(exps.size())) {
    int i = 0;
    for (unsigned e : exps) set(i++, e);
  }
  static Monomial from_vector(const std::vector<unsigned>& exps) {
    Monomial m(static_cast<int>(exps.size()));
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    return m;
  }
  static Monomial unit(int n, int i) {
    Monomial m(n);
    m.set(i, 1);
    return m;
  }

  int n() const { return n_; }
  unsigned operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, unsigned e) {
    deg_ = deg_ - e_[static_cast<std::size_t>(i)] + e;
    e_[static_cast<std::size_t>(i)] = e;
  }
  unsigned degree() const { return deg_; }
  std::vector<unsigned> exponents() const { return {e_.begin(), e_.begin() + n_}; }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) r.e_[static_cast<std::size_t>(i)] += o.e_[static_cast<std::size_t>(i)];
    r.deg_ += o.deg_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  /// Graded lexicographic order with x1 > x2 > ... > xn.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    return a.e_ < b.e_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < n_; ++i) {
      h ^= e_[static_cast<std::size_t>(i)];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of variables.
/// Terms are kept in graded-lex descending order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(int n = 0) : n_(n) {
    if (n < 0 || n > kMaxVars) throw DimensionError("variable count out of range: " + std::to_string(n));
  }

  static Polynomial constant(int n, const Rational& c) {
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.push_back({Monomial(n), c});
    return p;
  }
  static Polynomial var(int n, int i) {
    if (i < 0 || i >= n) throw DimensionError("variable index out of range");
    Polynomial p(n);
    p.terms_.push_back({Monomial::unit(n, i), Rational(1)});
    return p;
  }
  static Polynomial monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.n());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds a normalized polynomial from arbitrary terms (duplicates are summed).
  static Polynomial from_terms(int n, std::vector<Term> terms) {
    Polynomial p(n);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (auto& t : terms) {
      if (t.m.n() != n) throw DimensionError("monomial length differs from variable count");
      acc[t.m] += t.c;
    }
    p.adopt(acc);
    return p;
  }

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }

  Degree degree() const {
    if (terms_.empty()) return Degree::neg_inf();
    return Degree(terms_.front().m.degree());
  }

  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_less(x, t.m); });
    if (it != terms_.end() && it->m == m) return it->c;
    return Rational(0);
  }

  Rational constant_term() const { return coefficient(Monomial(n_)); }

  /// Largest exponent of variable i (0 for the zero polynomial).
  unsigned degree_in(int i) const {
    check_index(i);
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m[i]);
    return d;
  }
  bool uses_variable(int i) const { return degree_in(i) > 0; }

  /// Sum of the terms of total degree exactly d.
  Polynomial homogeneous_part(long long d) const {
    if (d < 0) throw DomainError("homogeneous_part needs d >= 0");
    Polynomial r(n_);
    for (const auto& t : terms_)
      if (t.m.degree() == static_cast<unsigned long long>(d)) r.terms_.push_back(t);
    return r;
  }

  Polynomial leading_form() const {
    if (is_zero()) throw DomainError("leading form of the zero polynomial");
    return homogeneous_part(static_cast<long long>(terms_.front().m.degree()));
  }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.front().m.degree() == terms_.back().m.degree();
  }

  Polynomial partial_derivative(int i) const {
    check_index(i);
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.m[i];
      if (e == 0) continue;
      Monomial m = t.m;
      m.set(i, e - 1);
      out.push_back({m, t.c * Rational(static_cast<long>(e))});
    }
    return from_terms(n_, std::move(out));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

  Polynomial scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(n_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(n_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Composition f(args_1, ..., args_n); every argument must share one variable count m.
  Polynomial substitute(const std::vector<Polynomial>& args) const {
    if (static_cast<int>(args.size()) != n_)
      throw DimensionError("substitute: expected " + std::to_string(n_) + " arguments, got " +
                           std::to_string(args.size()));
    if (args.empty()) return *this;
    int m = args[0].n();
    for (const auto& a : args)
      if (a.n() != m) throw DimensionError("substitute: arguments have different variable counts");
    if (is_zero()) return Polynomial(m);
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](const Term* a, const Term* b) {
      for (int i = 0; i < n_; ++i)
        if (a->m[i] != b->m[i]) return a->m[i] > b->m[i];
      return false;
    });
    std::vector<PowerCache> cache;
    cache.reserve(args.size());
    for (const auto& a : args) cache.emplace_back(a);
    return horner(order, 0, order.size(), 0, cache, m);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  /// Re-expresses the polynomial in a larger ambient space, variable i landing on positions[i].
  Polynomial embed(int new_n, const std::vector<int>& positions) const {
    if (static_cast<int>(positions.size()) != n_) throw DimensionError("embed: position count mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(new_n);
      for (int i = 0; i < n_; ++i) {
        if (positions[i] < 0 || positions[i] >= new_n) throw DimensionError("embed: position out of range");
        m.set(positions[i], m[positions[i]] + t.m[i]);
      }
      out.push_back({m, t.c});
    }
    return from_terms(new_n, std::move(out));
  }

 private:
  class PowerCache {
   public:
    explicit PowerCache(const Polynomial& base) : base_(&base) {}
    const Polynomial& get(unsigned e) {
      auto it = memo_.find(e);
      if (it != memo_.end()) return it->second;
      Polynomial r(base_->n());
      if (e == 0) {
        r = constant(base_->n(), Rational(1));
      } else if (e == 1) {
        r = *base_;
      } else {
        const Polynomial& half = get(e / 2);
        r = half * half;
        if (e & 1U) r = r * *base_;
      }
      return memo_.emplace(e, std::move(r)).first->second;
    }

   private:
    const Polynomial* base_;
    std::map<unsigned, Polynomial> memo_;
  };

  static Polynomial horner(const std::vector<const Term*>& order, std::size_t lo, std::size_t hi, int k,
                           std::vector<PowerCache>& cache, int m) {
    int n = static_cast<int>(cache.size());
    if (k == n) {
      Rational c(0);
      for (std::size_t i = lo; i < hi; ++i) c += order[i]->c;
      return constant(m, c);
    }
    Polynomial acc(m);
    unsigned prev = 0;
    bool first = true;
    std::size_t i = lo;
    while (i < hi) {
      unsigned e = order[i]->m[k];
      std::size_t j = i;
      while (j < hi && order[j]->m[k] == e) ++j;
      Polynomial inner = horner(order, i, j, k + 1, cache, m);
      if (first) {
        acc = std::move(inner);
        first = false;
      } else {
        if (prev > e) acc = acc * cache[static_cast<std::size_t>(k)].get(prev - e);
        acc += inner;
      }
      prev = e;
      i = j;
    }
    if (prev > 0) acc = acc * cache[static_cast<std::size_t>(k)].get(prev);
    return acc;
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw DimensionError("variable index " + std::to_string(i) + " out of range");
  }

  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_)
      throw DimensionError("mismatched variable counts: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
  }

  template <class Map>
  void adopt(Map& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.push_back({m, std::move(c)});
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_less(b.m, a.m); });
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.n_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_less(b.terms_[j].m, a.terms_[i].m))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_less(a.terms_[i].m, b.terms_[j].m)) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().c = -r.terms_.back().c;
      } else {
        Rational c = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static mpz_class common_denominator(const Polynomial& p) {
    mpz_class d = 1;
    for (const auto& t : p.terms_) {
      const mpz_class& td = t.c.raw().get_den();
      if (td != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), td.get_mpz_t());
    }
    return d;
  }

  static std::vector<mpz_class> scaled_numerators(const Polynomial& p, const mpz_class& d) {
    std::vector<mpz_class> out;
    out.reserve(p.terms_.size());
    for (const auto& t : p.terms_) {
      const mpq_class& q = t.c.raw();
      if (d == 1) out.push_back(q.get_num());
      else out.push_back(q.get_num() * (d / q.get_den()));
    }
    return out;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r(a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
      const Term& s = small.terms_[0];
      r.terms_.reserve(big.size());
      for (const auto& t : big.terms_) r.terms_.push_back({t.m * s.m, t.c * s.c});
      return r;
    }
    // Clear denominators so the inner loop is integer multiply-accumulate; divide once per term.
    mpz_class da = common_denominator(small), db = common_denominator(big);
    std::vector<mpz_class> sn = scaled_numerators(small, da), bn = scaled_numerators(big, db);
    mpz_class den = da * db;
    // Dense accumulator over the exponent box when it is small; the mixed-radix index is additive.
    std::array<std::size_t, kMaxVars> dims{}, stride{};
    std::size_t box = 1;
    for (int v = 0; v < a.n_; ++v) {
      unsigned ma = 0, mb = 0;
      for (const auto& t : small.terms_) ma = std::max(ma, t.m[v]);
      for (const auto& t : big.terms_) mb = std::max(mb, t.m[v]);
      dims[static_cast<std::size_t>(v)] = static_cast<std::size_t>(ma) + mb + 1;
      stride[static_cast<std::size_t>(v)] = box;
      box = box > kDenseBoxLimit / dims[static_cast<std::size_t>(v)] ? kDenseBoxLimit + 1 : box * dims[static_cast<std::size_t>(v)];
    }
    if (box <= kDenseBoxLimit && box <= 8 * small.size() * big.size()) {
      auto index = [&](const Monomial& m) {
        std::size_t k = 0;
        for (int v = 0; v < a.n_; ++v) k += m[v] * stride[static_cast<std::size_t>(v)];
        return k;
      };
      std::vector<std::size_t> si, bi;
      si.reserve(small.size());
      bi.reserve(big.size());
      for (const auto& t : small.terms_) si.push_back(index(t.m));
      for (const auto& t : big.terms_) bi.push_back(index(t.m));
      std::vector<mpz_class> dense(box);
      std::vector<char> touched(box, 0);
      for (std::size_t i = 0; i < si.size(); ++i)
        for (std::size_t j = 0; j < bi.size(); ++j) {
          std::size_t k = si[i] + bi[j];
          touched[k] = 1;
          mpz_addmul(dense[k].get_mpz_t(), sn[i].get_mpz_t(), bn[j].get_mpz_t());
        }
      for (std::size_t k = 0; k < box; ++k) {
        if (!touched[k] || dense[k] == 0) continue;
        Monomial m(a.n_);
        std::size_t rest = k;
        for (int v = 0; v < a.n_; ++v) {
          m.set(v, static_cast<unsigned>(rest % dims[static_cast<std::size_t>(v)]));
          rest /= dims[static_cast<std::size_t>(v)];
        }
        r.terms_.push_back({m, den == 1 ? Rational(dense[k]) : Rational(mpq_class(dense[k], den))});
      }
      std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return grlex_less(y.m, x.m); });
      return r;
    }
    std::unordered_map<Monomial, mpz_class, MonomialHash> iacc;
    iacc.reserve(std::min<std::size_t>(small.size() * big.size(), 1U << 22));
    for (std::size_t i = 0; i < small.terms_.size(); ++i) {
      const Monomial& sm = small.terms_[i].m;
      for (std::size_t j = 0; j < big.terms_.size(); ++j) {
        auto [it, inserted] = iacc.try_emplace(sm * big.terms_[j].m);
        mpz_addmul(it->second.get_mpz_t(), sn[i].get_mpz_t(), bn[j].get_mpz_t());
      }
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(iacc.size());
    for (auto& [m, v] : iacc) {
      if (v == 0) continue;
      acc.emplace(m, den == 1 ? Rational(v) : Rational(mpq_class(v, den)));
    }
    r.adopt(acc);
    return r;
  }

  int n_ = 0;
  std::vector<Term> terms_;
};

inline Degree total_degree(const Polynomial& f) { return f.degree(); }

}  // namespace tamemdeg
