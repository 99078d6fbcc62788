#pragma once

#include <set>
#include <string>
#include <vector>

#include "tamemdeg/bracket.hpp"
#include "tamemdeg/polymap.hpp"

namespace tamemdeg {

/// The map is not a Keller map: its Jacobian determinant is not a nonzero constant.
class NotKeller : public DomainError {
 public:
  explicit NotKeller(const std::string& msg) : DomainError("not a Keller map: " + msg) {}
};

/// A peeling step found leading forms that are not power-proportional, so the map is not an automorphism.
class PeelStuck : public DomainError {
 public:
  PeelStuck(const std::string& msg, int step)
      : DomainError("peeling stuck at step " + std::to_string(step) + ": " + msg), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// F = L2 o T_l o ... o T_1 o L1 with T_i = (x + f_i(y), y) for odd i and (x, y + f_i(x)) for even i.
struct Decomposition {
  Invertible L1;
  std::vector<Invertible> factors;  // T_1 .. T_l
  Invertible L2;
  int length = 0;
  std::vector<long long> factor_degrees;  // deg f_1 .. deg f_l

  PolyMap recompose() const {
    std::vector<PolyMap> chain{L2.map};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) chain.push_back(it->map);
    chain.push_back(L1.map);
    return compose_chain(chain);
  }
  PolyMap inverse() const {
    std::vector<PolyMap> chain{L1.inverse};
    for (const auto& t : factors) chain.push_back(t.inverse);
    chain.push_back(L2.inverse);
    return compose_chain(chain);
  }
};

namespace detail {

inline Invertible shift_x(const Polynomial& f_of_y) { return elementary(2, 0, f_of_y); }
inline Invertible shift_y(const Polynomial& f_of_x) { return elementary(2, 1, f_of_x); }

inline PolyMap swap2() { return PolyMap({Polynomial::var(2, 1), Polynomial::var(2, 0)}); }

inline Invertible conjugate_by_swap(const Invertible& t) {
  PolyMap s = swap2();
  return {compose(s, compose(t.map, s)), compose(s, compose(t.inverse, s))};
}

}  // namespace detail

/// Checks that the Jacobian determinant of a plane map is a nonzero constant.
inline void require_keller(const PolyMap& f) {
  if (f.n() != 2) throw DimensionError("plane map analysis needs exactly 2 components");
  Polynomial j = jac_minor(f[0], f[1], 0, 1);
  if (!j.is_constant() || j.is_zero()) throw NotKeller("Jacobian determinant is " + to_string(j));
}

/// Jung-van der Kulk peeling of a plane automorphism into its normalized amalgamated form.
inline Decomposition peel(const PolyMap& f) {
  require_keller(f);
  const Polynomial X = Polynomial::var(2, 0);
  Polynomial g1 = f[0], g2 = f[1];
  std::vector<Invertible> left;  // outermost first
  Invertible outer{PolyMap::identity(2), PolyMap::identity(2)};
  long long d = f.degree();
  long long guard = d * d + 10;
  int step = 0;

  auto deg = [](const Polynomial& p) { return p.degree().value(); };
  if (deg(g1) == deg(g2) && deg(g1) > 1) {
    auto pr = is_power_proportional(g1.leading_form(), g2.leading_form());
    if (!pr || pr->k != 1) throw PeelStuck("leading forms of equal-degree components are not proportional", step);
    outer = detail::shift_x(Polynomial::var(2, 1).scaled(pr->c));
    g1 -= g2.scaled(pr->c);
  }
  while (deg(g1) > 1 || deg(g2) > 1) {
    if (++step > guard) throw PeelStuck("step guard exceeded", step);
    bool y_type = deg(g1) < deg(g2);
    Polynomial& low = y_type ? g1 : g2;
    Polynomial& high = y_type ? g2 : g1;
    long long dl = deg(low);
    Polynomial shift(2);
    while (deg(high) > 1 && deg(high) >= dl) {
      auto pr = is_power_proportional(high.leading_form(), low.leading_form());
      if (!pr) throw PeelStuck("leading form is not a constant times a power of the other", step);
      Polynomial u = y_type ? X : Polynomial::var(2, 1);
      shift += u.pow(static_cast<unsigned>(pr->k)).scaled(pr->c);
      high -= low.pow(static_cast<unsigned>(pr->k)).scaled(pr->c);
    }
    if (deg(high) >= dl && dl > 1) throw PeelStuck("degree did not drop", step);
    left.push_back(y_type ? detail::shift_y(shift) : detail::shift_x(shift));
  }
  PolyMap rest({g1, g2});
  if (!is_affine_automorphism(rest)) throw PeelStuck("remaining map is not an affine automorphism", step);

  Decomposition dec;
  dec.L2 = outer;
  dec.L1 = affine_from_map(rest);
  // left = [P_0, ..., P_{m-1}], F = outer o P_0 o ... o P_{m-1} o rest, so T_1 = P_{m-1}.
  for (auto it = left.rbegin(); it != left.rend(); ++it) dec.factors.push_back(*it);
  bool innermost_y = !dec.factors.empty() && dec.factors.front().map[0] == X;
  if (innermost_y) {
    for (auto& t : dec.factors) t = detail::conjugate_by_swap(t);
    PolyMap s = detail::swap2();
    dec.L2 = {compose(dec.L2.map, s), compose(s, dec.L2.inverse)};
    dec.L1 = {compose(s, dec.L1.map), compose(dec.L1.inverse, s)};
  }
  dec.length = static_cast<int>(dec.factors.size());
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const PolyMap& t = dec.factors[i].map;
    bool odd = i % 2 == 0;
    const Polynomial& moved = odd ? t[0] : t[1];
    dec.factor_degrees.push_back((moved - Polynomial::var(2, odd ? 0 : 1)).degree().value());
  }
  if (!(dec.recompose() == f)) throw VerificationError("peel: decomposition does not recompose to the input");
  return dec;
}

inline int length(const PolyMap& f) { return peel(f).length; }

/// Exact inverse assembled from the factor inverses of the peeled decomposition.
inline PolyMap inverse(const PolyMap& f) { return peel(f).inverse(); }

/// Number of prime factors of k counted with multiplicity.
inline int omega(long long k) {
  if (k < 1) throw DomainError("omega: k must be positive");
  int count = 0;
  for (long long p = 2; p * p <= k; ++p)
    while (k % p == 0) {
      k /= p;
      ++count;
    }
  if (k > 1) ++count;
  return count;
}

inline int length_bound(long long d1, long long d2) {
  if (d1 < 1 || d2 < d1) throw DomainError("length_bound: need 1 <= d1 <= d2");
  return std::min(omega(d2), omega(d1) + 1);
}

/// Predicted multidegrees of F^{-1} for a plane automorphism with mdeg (d1, d2), d1 <= d2, and the given length.
inline std::set<Multidegree> inverse_mdeg_prediction(long long d1, long long d2, int len) {
  if (d1 < 1 || d2 < d1) throw DomainError("inverse_mdeg_prediction: need 1 <= d1 <= d2");
  if (len < 0) throw DomainError("inverse_mdeg_prediction: length must be nonnegative");
  auto fail = [&](const std::string& clause) {
    throw DomainError("inverse_mdeg_prediction: (" + std::to_string(d1) + "," + std::to_string(d2) + ") with length " +
                      std::to_string(len) + " violates " + clause);
  };
  std::set<Multidegree> out;
  auto add_family = [&](long long top, long long base, int need) {
    for (long long a = 2; a < base; ++a)
      if (base % a == 0 && omega(base / a) >= need) {
        out.insert({top, top / a});
        out.insert({top / a, top});
      }
    out.insert({top, top});
  };
  if (len == 0) {
    if (d1 != 1 || d2 != 1) fail("length 0 requires mdeg (1,1)");
    out.insert({1, 1});
  } else if (len == 1) {
    if (d2 <= 1 || (d1 != 1 && d1 != d2)) fail("length 1 requires mdeg (1,d) or (d,d) with d > 1");
    out = {{1, d2}, {d2, 1}, {d2, d2}};
  } else if (d1 == d2) {
    if (omega(d1) < len) fail("mdeg (d,d) requires l(d) >= length");
    add_family(d1, d1, len - 1);
  } else if (len == 2) {
    if (d1 == 1 || d2 % d1 != 0) fail("length 2 requires 1 < d1 < d2 with d1 | d2");
    out = {{d2, d2 / d1}, {d2 / d1, d2}, {d2, d2}};
  } else {
    if (d1 == 1 || d2 % d1 != 0) fail("length >= 3 requires 1 < d1 < d2 with d1 | d2");
    if (omega(d1) < len - 1) fail("length >= 3 requires l(d1) >= length - 1");
    for (long long a = 2; a < d1; ++a)
      if (d1 % a == 0 && omega(d1 / a) >= len - 2) {
        out.insert({d2, d2 / a});
        out.insert({d2 / a, d2});
      }
    out.insert({d2, d2});
  }
  return out;
}

}  // namespace tamemdeg
