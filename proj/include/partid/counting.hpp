#pragma once

// Exact partition counts used as independent oracles for the enumerators.

#include <cstddef>
#include <vector>

#include "partid/numeric.hpp"
#include "partid/partitions.hpp"

namespace partid {

/// values[i] for i = 0..N; values[0] = 1 by convention.
struct CountTable {
  std::vector<BigInt> values;

  BigInt const& operator[](std::size_t i) const { return values.at(i); }
  std::size_t size() const noexcept { return values.size(); }
};

/// p(0..N) by Euler's pentagonal-number recurrence
///   p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline CountTable partition_count(unsigned N) {
  std::vector<BigInt> p(N + 1);
  p[0] = 1;
  for (long n = 1; n <= static_cast<long>(N); ++n) {
    BigInt acc = 0;
    for (long k = 1;; ++k) {
      long const g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      long const g2 = k * (3 * k + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[n] = acc;
  }
  return {std::move(p)};
}

/// p_m(0..N): partitions with no part divisible by m and fewer than m
/// ones; p_m(0) = 1. Computed by a knapsack over the allowed parts, with
/// part 1 capped at m-1 copies.
inline CountTable restricted_count(unsigned N, unsigned m) {
  detail::require_modulus(m, "restricted_count");
  std::vector<BigInt> v(N + 1);
  // Part 1 with multiplicity 0..m-1.
  for (unsigned t = 0; t < m && t <= N; ++t) v[t] = 1;
  for (unsigned part = 2; part <= N; ++part) {
    if (part % m == 0) continue;
    for (unsigned s = part; s <= N; ++s) v[s] += v[s - part];
  }
  return {std::move(v)};
}

}  // namespace partid
