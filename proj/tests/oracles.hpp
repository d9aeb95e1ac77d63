#pragma once

// Test-only reference implementations. These follow the definitions
// literally and share no code paths with the library beyond its value
// types, so they can serve as oracles for it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "partid/numeric.hpp"
#include "partid/partitions.hpp"

namespace oracle {

using Dense = std::vector<std::uint64_t>;  // t[i] for i = 0..n, t[0] unused

/// All multiplicity vectors with sum i*t_i = n, by recursion on the largest
/// part size downwards.
inline std::vector<Dense> partitions(unsigned n) {
  std::vector<Dense> out;
  Dense t(n + 1, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned rem) {
    if (part == 0) {
      if (rem == 0) out.push_back(t);
      return;
    }
    for (unsigned c = 0; c * part <= rem; ++c) {
      t[part] = c;
      rec(part - 1, rem - c * part);
    }
    t[part] = 0;
  };
  rec(n, n);
  return out;
}

inline std::uint64_t at(Dense const& t, std::uint64_t i) { return i < t.size() ? t[i] : 0; }

inline partid::Partition to_partition(Dense const& t) {
  std::vector<partid::Partition::Entry> e;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i]) e.push_back({static_cast<partid::Part>(i), static_cast<std::uint32_t>(t[i])});
  return partid::Partition::from_multiplicities(e);
}

/// p(0..N) from the product prod 1/(1-q^k), coin-change style.
inline std::vector<partid::BigInt> partition_numbers(unsigned N) {
  std::vector<partid::BigInt> p(N + 1, 0);
  p[0] = 1;
  for (unsigned k = 1; k <= N; ++k)
    for (unsigned s = k; s <= N; ++s) p[s] += p[s - k];
  return p;
}

/// Literal Glaisher merge: find any value with at least m copies, merge m
/// of them, rescan, until none remain.
inline std::multiset<std::uint64_t> glaisher_merge(std::multiset<std::uint64_t> ms, unsigned m) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto v : std::set<std::uint64_t>(ms.begin(), ms.end())) {
      if (ms.count(v) >= m) {
        for (unsigned i = 0; i < m; ++i) ms.erase(ms.find(v));
        ms.insert(v * m);
        changed = true;
        break;
      }
    }
  }
  return ms;
}

/// Literal Glaisher split: split any multiple of m into m equal parts,
/// rescan, until none remain.
inline std::multiset<std::uint64_t> glaisher_split(std::multiset<std::uint64_t> ms, unsigned m) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto v : ms) {
      if (v % m == 0) {
        ms.erase(ms.find(v));
        for (unsigned i = 0; i < m; ++i) ms.insert(v / m);
        changed = true;
        break;
      }
    }
  }
  return ms;
}

inline std::multiset<std::uint64_t> as_multiset(partid::PartList const& p) {
  return {p.begin(), p.end()};
}

// The m = 2 identities written the classical way: signs from t_2+t_4+...,
// weights t_2+2t_4+..., floor(t_i/2), odd-part weight and t mod 2.
inline std::array<partid::BigInt, 4> classical_m2(unsigned n, int sign) {
  partid::BigInt l1 = 0, r1 = 0, l2 = 0, r2 = 0;
  for (auto const& t : partitions(n)) {
    std::uint64_t even_count = 0, half = 0, even_w = 0, odd_w = 0, half_w = 0, hat_w = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
      if (i % 2 == 0) {
        even_count += t[i];
        even_w += (i / 2) * t[i];
      } else {
        odd_w += i * t[i];
      }
      half += t[i] / 2;
      half_w += i * (t[i] / 2);
      hat_w += i * (t[i] % 2);
    }
    int const sl = partid::sign_pow(sign, even_count), sr = partid::sign_pow(sign, half);
    l1 += sl * static_cast<long long>(even_w);
    r1 += sr * static_cast<long long>(half_w);
    l2 += sl * static_cast<long long>(odd_w);
    r2 += sr * static_cast<long long>(hat_w);
  }
  return {l1, r1, l2, r2};
}

}  // namespace oracle
