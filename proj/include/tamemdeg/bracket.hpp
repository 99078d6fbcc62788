#pragma once

#include <numeric>
#include <optional>

#include "tamemdeg/polynomial.hpp"

namespace tamemdeg {

/// dF/dx_i * dG/dx_j - dF/dx_j * dG/dx_i  (0-based indices, i < j).
inline Polynomial jac_minor(const Polynomial& f, const Polynomial& g, int i, int j) {
  if (f.n() != g.n()) throw DimensionError("jac_minor: mismatched variable counts");
  if (!(0 <= i && i < j && j < f.n())) throw DomainError("jac_minor: need 0 <= i < j < n");
  return f.partial_derivative(i) * g.partial_derivative(j) - f.partial_derivative(j) * g.partial_derivative(i);
}

/// deg[f,g]: 2 + the largest degree of a 2x2 Jacobian minor, -inf if all minors vanish.
inline Degree poisson_degree(const Polynomial& f, const Polynomial& g) {
  if (f.n() != g.n()) throw DimensionError("poisson_degree: mismatched variable counts");
  int n = f.n();
  std::vector<Polynomial> df, dg;
  for (int i = 0; i < n; ++i) {
    df.push_back(f.partial_derivative(i));
    dg.push_back(g.partial_derivative(i));
  }
  Degree best = Degree::neg_inf();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Degree d = (df[i] * dg[j] - df[j] * dg[i]).degree();
      if (d > best) best = d;
    }
  return best.is_neg_inf() ? best : Degree(best.value() + 2);
}

inline bool algebraically_independent(const Polynomial& f, const Polynomial& g) {
  return !poisson_degree(f, g).is_neg_inf();
}

struct PowerRatio {
  Rational c;
  long long k = 0;
};

/// Returns (c, k) with hbar = c * fbar^k when it holds exactly, for homogeneous nonzero forms.
inline std::optional<PowerRatio> is_power_proportional(const Polynomial& hbar, const Polynomial& fbar) {
  if (hbar.n() != fbar.n()) throw DimensionError("is_power_proportional: mismatched variable counts");
  if (hbar.is_zero() || fbar.is_zero()) throw DomainError("is_power_proportional: zero form");
  if (!hbar.is_homogeneous() || !fbar.is_homogeneous())
    throw DomainError("is_power_proportional: forms must be homogeneous");
  long long dh = hbar.degree().value(), df = fbar.degree().value();
  if (df == 0) {
    if (dh != 0) return std::nullopt;
    return PowerRatio{hbar.terms()[0].c / fbar.terms()[0].c, 1};
  }
  if (dh % df != 0) return std::nullopt;
  long long k = dh / df;
  // The leading monomial of fbar^k is the k-th power of fbar's leading monomial.
  const Term& lf = fbar.terms()[0];
  const Term& lh = hbar.terms()[0];
  Monomial target(lf.m.n());
  for (int i = 0; i < lf.m.n(); ++i) target.set(i, lf.m[i] * static_cast<unsigned>(k));
  if (!(target == lh.m)) return std::nullopt;
  if (hbar.size() > 1 && fbar.size() == 1) return std::nullopt;
  Rational c = lh.c / lf.c.pow(static_cast<unsigned>(k));
  if (!(fbar.pow(static_cast<unsigned>(k)).scaled(c) == hbar)) return std::nullopt;
  return PowerRatio{c, k};
}

struct ReducedPairReport {
  bool independent = false;
  bool leading_forms_dependent = false;
  bool f_bar_in_C_of_g_bar = false;
  bool g_bar_in_C_of_f_bar = false;
  bool is_star_reduced = false;
  std::optional<long long> p;
};

inline ReducedPairReport reduced_pair_report(const Polynomial& f, const Polynomial& g) {
  if (f.is_constant() || g.is_constant()) throw DomainError("reduced_pair_report: constant input");
  ReducedPairReport r;
  r.independent = algebraically_independent(f, g);
  Polynomial fb = f.leading_form(), gb = g.leading_form();
  r.leading_forms_dependent = poisson_degree(fb, gb).is_neg_inf();
  r.f_bar_in_C_of_g_bar = is_power_proportional(fb, gb).has_value();
  r.g_bar_in_C_of_f_bar = is_power_proportional(gb, fb).has_value();
  r.is_star_reduced = r.independent && r.leading_forms_dependent && !r.f_bar_in_C_of_g_bar && !r.g_bar_in_C_of_f_bar;
  long long df = f.degree().value(), dg = g.degree().value();
  if (r.is_star_reduced && df < dg) r.p = df / std::gcd(df, dg);
  return r;
}

/// Lower bound q(p*deg_g - deg_g - deg_f + bracket) + r*deg_g for deg G(f,g), where
/// p = deg_f / gcd(deg_f, deg_g) and degY_G = p*q + r.
inline long long su_lower_bound(long long deg_f, long long deg_g, long long bracket_deg, long long degY_G) {
  if (deg_f >= deg_g) throw DomainError("su_lower_bound: need deg_f < deg_g");
  if (deg_f <= 0 || degY_G < 0) throw DomainError("su_lower_bound: degrees must be positive");
  long long p = deg_f / std::gcd(deg_f, deg_g);
  long long q = degY_G / p, r = degY_G % p;
  return q * (p * deg_g - deg_g - deg_f + bracket_deg) + r * deg_g;
}

}  // namespace tamemdeg
