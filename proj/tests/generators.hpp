#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tamemdeg/polymap.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  tamemdeg::Rational small_rational(long long bound = 3) {
    long long num = uniform(-bound, bound), den = uniform(1, 2);
    return tamemdeg::Rational(num, den);
  }
  tamemdeg::Rational nonzero_int(long long bound = 3) {
    long long v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return tamemdeg::Rational(v);
  }

 private:
  std::mt19937_64 eng_;
};

/// Random polynomial in n variables with total degree exactly deg (when deg >= 0).
inline tamemdeg::Polynomial polynomial(Rng& r, int n, int deg, int terms = 5) {
  using namespace tamemdeg;
  Polynomial p(n);
  auto random_monomial = [&](int total) {
    Monomial m(n);
    int left = total;
    for (int i = 0; i < n - 1; ++i) {
      int e = static_cast<int>(r.uniform(0, left));
      m.set(i, static_cast<unsigned>(e));
      left -= e;
    }
    m.set(n - 1, static_cast<unsigned>(left));
    return m;
  };
  for (int t = 0; t < terms; ++t) p += Polynomial::monomial(random_monomial(static_cast<int>(r.uniform(0, deg))), r.small_rational());
  if (deg >= 0) {
    while (p.degree() != Degree(deg)) p += Polynomial::monomial(random_monomial(deg), r.nonzero_int());
  }
  return p;
}

/// Homogeneous polynomial of the given degree (nonzero).
inline tamemdeg::Polynomial homogeneous(Rng& r, int n, int deg, int terms = 3) {
  tamemdeg::Polynomial p(n);
  while (p.is_zero()) p = polynomial(r, n, deg, terms).homogeneous_part(deg);
  return p;
}

/// Invertible integer matrix with entries in [-2, 2].
inline tamemdeg::Matrix invertible_matrix(Rng& r, int n) {
  using namespace tamemdeg;
  for (;;) {
    Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& v : row) v = Rational(r.uniform(-2, 2));
    try {
      invert_matrix(m);
      return m;
    } catch (const DomainError&) {
    }
  }
}

inline tamemdeg::Invertible affine(Rng& r, int n) {
  std::vector<tamemdeg::Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(tamemdeg::Rational(r.uniform(-3, 3)));
  return tamemdeg::affine(invertible_matrix(r, n), v);
}

/// Univariate polynomial in variable `var` of n-space with degree exactly deg and integer coefficients.
inline tamemdeg::Polynomial univariate(Rng& r, int n, int var, int deg) {
  using namespace tamemdeg;
  Polynomial f(n);
  for (int e = 0; e < deg; ++e) {
    Monomial m(n);
    m.set(var, static_cast<unsigned>(e));
    f += Polynomial::monomial(m, Rational(r.uniform(-3, 3)));
  }
  Monomial top(n);
  top.set(var, static_cast<unsigned>(deg));
  return f + Polynomial::monomial(top, r.nonzero_int());
}

/// A plane tame chain L2 o T_l o ... o T_1 o L1 in normalized alternating form: T_i shifts x by
/// f_i(y) for odd i and y by f_i(x) for even i, deg f_i in [2, 5], l in [0, 4], and the product
/// of the factor degrees at most max_product.
struct PlaneChain {
  std::vector<tamemdeg::PolyMap> maps;  // outermost first
  std::vector<long long> degrees;       // deg f_1 .. deg f_l
  tamemdeg::PolyMap composed;
};

inline PlaneChain plane_chain(Rng& r, long long max_product) {
  PlaneChain c;
  int len = static_cast<int>(r.uniform(0, 4));
  long long prod = 1;
  for (int i = 0; i < len; ++i) {
    long long d = r.uniform(2, 5);
    while (d > 2 && prod * d > max_product) --d;
    if (prod * d > max_product) break;
    c.degrees.push_back(d);
    prod *= d;
  }
  c.maps.push_back(affine(r, 2).map);
  for (int i = static_cast<int>(c.degrees.size()) - 1; i >= 0; --i) {
    bool odd = i % 2 == 0;  // T_{i+1}
    int var = odd ? 1 : 0;
    c.maps.push_back(tamemdeg::elementary(2, odd ? 0 : 1, univariate(r, 2, var, static_cast<int>(c.degrees[static_cast<std::size_t>(i)]))).map);
  }
  c.maps.push_back(affine(r, 2).map);
  c.composed = tamemdeg::compose_chain(c.maps);
  return c;
}

/// Random 3-dimensional tame map: affine o triangular o affine with small degrees.
inline tamemdeg::PolyMap tame3(Rng& r, int max_deg = 3) {
  using namespace tamemdeg;
  std::vector<int> perm{0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), std::mt19937(static_cast<unsigned>(r.uniform(0, 1 << 30))));
  std::vector<Polynomial> fs;
  for (int k = 1; k < 3; ++k) {
    Polynomial f(3);
    int deg = static_cast<int>(r.uniform(1, max_deg));
    for (int t = 0; t < 3; ++t) {
      Monomial m(3);
      int left = static_cast<int>(r.uniform(0, deg));
      for (int j = 0; j < k; ++j) {
        int e = j == k - 1 ? left : static_cast<int>(r.uniform(0, left));
        m.set(perm[static_cast<std::size_t>(j)], static_cast<unsigned>(e));
        left -= e;
      }
      f += Polynomial::monomial(m, Rational(r.uniform(-2, 2)));
    }
    fs.push_back(f);
  }
  return compose_chain({affine(r, 3).map, triangular(perm, fs).map, affine(r, 3).map});
}

}  // namespace gen
