#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tamemdeg/errors.hpp"

namespace tamemdeg {

/// The two-generator semigroup d1 N + d2 N, normalized so d1 <= d2.
struct SemigroupPair {
  long long d1 = 1;
  long long d2 = 1;

  SemigroupPair(long long a, long long b) : d1(std::min(a, b)), d2(std::max(a, b)) {
    if (d1 < 1) throw DomainError("semigroup generators must be positive");
  }
  long long gcd() const { return std::gcd(d1, d2); }
};

struct Decomposition2 {
  long long k1 = 0;
  long long k2 = 0;
};

/// k = k1 d1 + k2 d2 with the largest possible k2, or nothing when k is not a member.
inline std::optional<Decomposition2> member(const SemigroupPair& s, long long k) {
  if (k < 0) return std::nullopt;
  long long g = s.gcd();
  if (k % g != 0) return std::nullopt;
  long long a = s.d1 / g, b = s.d2 / g, m = k / g;
  // k2 is determined modulo a: k2 = m * b^{-1} (mod a); members use the largest such k2 <= m/b.
  long long k2max = m / b;
  if (a == 1) return Decomposition2{m - k2max * b, k2max};
  long long binv = 1;
  {
    long long t = 0, newt = 1, r = a, newr = b % a;
    while (newr != 0) {
      long long q = r / newr;
      std::tie(t, newt) = std::make_pair(newt, t - q * newt);
      std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    binv = ((t % a) + a) % a;
  }
  long long residue = static_cast<long long>((static_cast<__int128>(m % a) * binv) % a);
  if (residue > k2max) return std::nullopt;
  long long k2 = k2max - ((k2max - residue) % a);
  long long rest = m - k2 * b;
  return Decomposition2{rest / a, k2};
}

/// (d1-1)(d2-1)-1 for coprime generators; -1 when d1 = 1 (no gaps).
inline long long frobenius(const SemigroupPair& s) {
  if (s.gcd() != 1) throw DomainError("frobenius: generators must be coprime");
  if (s.d1 == 1) return -1;
  return (s.d1 - 1) * (s.d2 - 1) - 1;
}

/// Sorted non-members k >= min_k (coprime generators only).
inline std::vector<long long> gaps(const SemigroupPair& s, long long min_k = 0) {
  long long f = frobenius(s);
  std::vector<long long> out;
  for (long long k = std::max<long long>(min_k, 0); k <= f; ++k)
    if (!member(s, k)) out.push_back(k);
  return out;
}

/// Gaps of 3N + p N at least p, via the closed form {2p - 3k : k = 1..floor(p/3)}.
inline std::vector<long long> gaps_three_closed_form(long long p) {
  if (p < 3 || p % 3 == 0) throw DomainError("gaps_three_closed_form: need p >= 4 coprime to 3");
  std::vector<long long> out;
  for (long long k = p / 3; k >= 1; --k) out.push_back(2 * p - 3 * k);
  return out;
}

}  // namespace tamemdeg
