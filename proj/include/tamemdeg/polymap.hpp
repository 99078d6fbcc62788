#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tamemdeg/poly_text.hpp"
#include "tamemdeg/polynomial.hpp"

namespace tamemdeg {

using Multidegree = std::vector<long long>;

inline Multidegree sorted(Multidegree d) {
  std::sort(d.begin(), d.end());
  return d;
}

inline std::string to_string(const Multidegree& d, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? sep : "") + std::to_string(d[i]);
  return s;
}

/// A polynomial map of affine n-space: n components, each a polynomial in n variables.
class PolyMap {
 public:
  PolyMap() = default;
  explicit PolyMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw DimensionError("a map needs at least one component");
    int n = static_cast<int>(comps_.size());
    for (const auto& c : comps_)
      if (c.n() != n) throw DimensionError("component variable count differs from map dimension");
  }

  static PolyMap identity(int n) {
    std::vector<Polynomial> c;
    for (int i = 0; i < n; ++i) c.push_back(Polynomial::var(n, i));
    return PolyMap(std::move(c));
  }

  /// Parses one polynomial string per component over the declared variables.
  static PolyMap parse(const std::vector<std::string>& components, const VarNames& vars) {
    std::vector<Polynomial> c;
    for (const auto& s : components) c.push_back(parse_polynomial(s, vars));
    if (c.size() != vars.size()) throw DimensionError("component count differs from declared variables");
    return PolyMap(std::move(c));
  }
  static PolyMap parse(const std::vector<std::string>& components) {
    return parse(components, default_var_names(static_cast<int>(components.size())));
  }

  int n() const { return static_cast<int>(comps_.size()); }
  const Polynomial& operator[](int i) const { return comps_.at(static_cast<std::size_t>(i)); }
  Polynomial& operator[](int i) { return comps_.at(static_cast<std::size_t>(i)); }
  const std::vector<Polynomial>& components() const { return comps_; }

  /// deg F = max of component degrees.
  long long degree() const {
    long long d = 0;
    for (const auto& c : comps_)
      if (!c.is_zero()) d = std::max<long long>(d, c.degree().value());
    return d;
  }

  std::vector<std::string> component_strings(const VarNames& vars) const {
    std::vector<std::string> s;
    for (const auto& c : comps_) s.push_back(to_string(c, vars));
    return s;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.comps_ == b.comps_; }

  /// Places this map on the given coordinates of a larger space; other coordinates stay fixed.
  PolyMap embed(int new_n, const std::vector<int>& positions) const {
    if (static_cast<int>(positions.size()) != n()) throw DimensionError("embed: position count mismatch");
    PolyMap out = identity(new_n);
    for (int i = 0; i < n(); ++i) out[positions[i]] = comps_[static_cast<std::size_t>(i)].embed(new_n, positions);
    return out;
  }

 private:
  std::vector<Polynomial> comps_;
};

/// (f o g)(x) = f(g(x)).
inline PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (f.n() != g.n()) throw DimensionError("compose: dimension mismatch");
  std::vector<Polynomial> c;
  c.reserve(static_cast<std::size_t>(f.n()));
  for (const auto& fi : f.components()) c.push_back(fi.substitute(g.components()));
  return PolyMap(std::move(c));
}

/// f_1 o f_2 o ... o f_k (the last map is applied first).
inline PolyMap compose_chain(const std::vector<PolyMap>& chain) {
  if (chain.empty()) throw DomainError("compose_chain: empty chain");
  PolyMap acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = compose(chain[i], acc);
  return acc;
}

/// Componentwise total degree; a zero component is reported as -1.
inline Multidegree mdeg(const PolyMap& f) {
  Multidegree d;
  for (const auto& c : f.components()) d.push_back(c.is_zero() ? -1 : c.degree().value());
  return d;
}

/// Degree-one homogeneous parts of the components (constants dropped).
inline PolyMap linear_part(const PolyMap& f) {
  std::vector<Polynomial> c;
  for (const auto& fi : f.components()) c.push_back(fi.homogeneous_part(1));
  return PolyMap(std::move(c));
}

using Matrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; throws DomainError when singular.
inline Matrix invert_matrix(const Matrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("matrix must be square");
  Matrix a = m, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// A map bundled with its exact inverse.
struct Invertible {
  PolyMap map;
  PolyMap inverse;
};

/// x -> M x + v.
inline PolyMap affine_map(const Matrix& m, const std::vector<Rational>& v) {
  int n = static_cast<int>(m.size());
  if (static_cast<int>(v.size()) != n) throw DimensionError("affine: vector length mismatch");
  std::vector<Polynomial> c;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw DimensionError("affine: matrix must be square");
    Polynomial p = Polynomial::constant(n, v[i]);
    for (int j = 0; j < n; ++j) p += Polynomial::var(n, j).scaled(m[i][j]);
    c.push_back(p);
  }
  return PolyMap(std::move(c));
}

inline Invertible affine(const Matrix& m, const std::vector<Rational>& v) {
  Matrix inv = invert_matrix(m);
  std::size_t n = m.size();
  std::vector<Rational> w(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] -= inv[i][j] * v[j];
  return {affine_map(m, v), affine_map(inv, w)};
}

inline Invertible linear(const Matrix& m) { return affine(m, std::vector<Rational>(m.size(), Rational(0))); }

/// Affine-map test: every component has degree <= 1 and the linear part is invertible.
inline bool is_affine_automorphism(const PolyMap& f) {
  int n = f.n();
  Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (f[i].degree() > Degree(1)) return false;
    for (int j = 0; j < n; ++j) m[i][j] = f[i].coefficient(Monomial::unit(n, j));
  }
  try {
    invert_matrix(m);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

/// Matrix and translation of an affine map.
inline std::pair<Matrix, std::vector<Rational>> affine_parts(const PolyMap& f) {
  int n = f.n();
  Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) {
    if (f[i].degree() > Degree(1)) throw DomainError("map is not affine");
    for (int j = 0; j < n; ++j) m[i][j] = f[i].coefficient(Monomial::unit(n, j));
    v.push_back(f[i].constant_term());
  }
  return {m, v};
}

inline Invertible affine_from_map(const PolyMap& f) {
  auto [m, v] = affine_parts(f);
  return affine(m, v);
}

/// x_i -> x_i + f with f free of x_i (0-based i).
inline Invertible elementary(int n, int i, const Polynomial& f) {
  if (f.n() != n) throw DimensionError("elementary: polynomial lives in the wrong dimension");
  if (i < 0 || i >= n) throw DimensionError("elementary: index out of range");
  if (f.uses_variable(i)) throw DomainError("elementary: f must not involve the shifted variable");
  PolyMap fwd = PolyMap::identity(n), inv = PolyMap::identity(n);
  fwd[i] += f;
  inv[i] -= f;
  return {fwd, inv};
}

/// Triangular map in the variable order perm: x_{perm[0]} fixed and
/// x_{perm[k]} -> x_{perm[k]} + f_k(x_{perm[0]}, ..., x_{perm[k-1]}) for k >= 1.
inline Invertible triangular(const std::vector<int>& perm, const std::vector<Polynomial>& fs) {
  int n = static_cast<int>(perm.size());
  if (static_cast<int>(fs.size()) != n - 1) throw DimensionError("triangular: need n-1 polynomials");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]++) throw DomainError("triangular: perm is not a permutation");
  }
  PolyMap fwd = PolyMap::identity(n), inv = PolyMap::identity(n);
  for (int k = 1; k < n; ++k) {
    const Polynomial& f = fs[static_cast<std::size_t>(k - 1)];
    if (f.n() != n) throw DimensionError("triangular: polynomial lives in the wrong dimension");
    for (int later = k; later < n; ++later)
      if (f.uses_variable(perm[later])) throw DomainError("triangular: f_k may only use earlier variables");
    fwd[perm[k]] += f;
  }
  // Back-substitution: the inverse on x_{perm[k]} subtracts f_k evaluated at the earlier inverse components.
  for (int k = 1; k < n; ++k) {
    std::vector<Polynomial> args = inv.components();
    inv[perm[k]] = Polynomial::var(n, perm[k]) - fs[static_cast<std::size_t>(k - 1)].substitute(args);
  }
  return {fwd, inv};
}

/// x_i -> a_i x_i + f_i(x_{i+1}, ..., x_n), f_n constant.
inline Invertible de_jonquieres(const std::vector<Rational>& a, const std::vector<Polynomial>& fs) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(fs.size()) != n) throw DimensionError("de_jonquieres: need n polynomials");
  PolyMap fwd = PolyMap::identity(n), inv = PolyMap::identity(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) throw DomainError("de_jonquieres: multipliers must be nonzero");
    const Polynomial& f = fs[static_cast<std::size_t>(i)];
    if (f.n() != n) throw DimensionError("de_jonquieres: polynomial lives in the wrong dimension");
    for (int j = 0; j <= i; ++j)
      if (f.uses_variable(j)) throw DomainError("de_jonquieres: f_i may only use later variables");
    fwd[i] = Polynomial::var(n, i).scaled(a[i]) + f;
  }
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Polynomial> args = inv.components();
    inv[i] = (Polynomial::var(n, i) - fs[static_cast<std::size_t>(i)].substitute(args)).scaled(Rational(1) / a[i]);
  }
  return {fwd, inv};
}

namespace detail {

struct GalleryEntry {
  const char* name;
  const char* description;
  std::vector<std::string> components;
};

inline const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = {
      {"nagata", "Nagata automorphism of C^3",
       {"x + 2*y*(y^2 + z*x) - z*(y^2 + z*x)^2", "y - z*(y^2 + z*x)", "z"}},
      {"swap13", "transposition (x,y,z) -> (z,y,x)", {"z", "y", "x"}},
      {"su_t1", "first triangular factor of the reduction example", {"x", "y + x^2", "z + 2*x*y + x^3"}},
      {"su_t2", "de Jonquieres factor of the reduction example", {"6*x + 6*y*z + z^3", "4*y + z^2", "z"}},
      {"su_t3", "third factor of the reduction example", {"x", "y", "z + x^2 - y^3"}},
      {"su_l", "linear factor of the reduction example", {"x + z", "y", "z"}},
  };
  return entries;
}

}  // namespace detail

inline std::vector<std::string> gallery_names() {
  std::vector<std::string> names;
  for (const auto& e : detail::gallery_entries()) names.emplace_back(e.name);
  names.emplace_back("tn");
  names.emplace_back("su_example");
  return names;
}

/// Named maps: nagata, swap13, tn (= swap13 o nagata), su_t1, su_t2, su_t3, su_l and
/// su_example (= su_l o su_t3 o su_t2 o su_t1).
inline PolyMap gallery(const std::string& name) {
  for (const auto& e : detail::gallery_entries())
    if (name == e.name) return PolyMap::parse(e.components, {"x", "y", "z"});
  if (name == "tn") return compose(gallery("swap13"), gallery("nagata"));
  if (name == "su_example")
    return compose_chain({gallery("su_l"), gallery("su_t3"), gallery("su_t2"), gallery("su_t1")});
  throw DomainError("unknown gallery map '" + name + "'");
}

/// (T o N)^n for n >= 1, T = swap13 and N = nagata.  Each step applies T o N through its
/// defining formula (z, y - z s, x + 2 y s - z s^2) with s = y^2 + z x evaluated on the previous
/// components, and checks that s is carried to Y^2 + Z X.
inline PolyMap nagata_power(int n) {
  if (n < 1) throw DomainError("nagata_power: n must be >= 1");
  PolyMap p = PolyMap::identity(3);
  Polynomial invariant = parse_polynomial("y^2 + z*x", 3);
  for (int step = 0; step < n; ++step) {
    const Polynomial &f = p[0], &g = p[1], &h = p[2];
    Polynomial s = g * g + h * f;
    if (!(s == invariant)) throw VerificationError("nagata_power: invariant g^2 + h f = y^2 + z x failed");
    Polynomial two_s = s.scaled(Rational(2));
    PolyMap next({h, g - h * s, f + g * two_s - h * s * s});
    p = std::move(next);
  }
  const Polynomial &f = p[0], &g = p[1], &h = p[2];
  if (!(g * g + h * f == invariant)) throw VerificationError("nagata_power: invariant failed");
  return p;
}

}  // namespace tamemdeg
