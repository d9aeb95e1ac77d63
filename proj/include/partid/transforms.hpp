#pragma once

// Glaisher's maps between O_m (no part divisible by m) and D_m (every part
// repeated fewer than m times), the single-step maps between E_m (every
// part divisible by m) and N_m (every multiplicity divisible by m), and
// the bijection sigma_m of P_n built from them.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partid/partitions.hpp"

namespace partid {

namespace detail {

using Counts = std::map<Part, std::uint64_t>;

inline Counts count_parts(PartList const& parts) {
  Counts c;
  for (auto p : parts) ++c[p];
  return c;
}

inline PartList from_counts(Counts const& c) {
  std::vector<Part> v;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v.insert(v.end(), it->second, it->first);
  return PartList(std::move(v));
}

}  // namespace detail

/// O_m -> D_m: merge m equal parts into one part m times as large until
/// every value occurs fewer than m times.
inline PartList phi_od(PartList const& parts, unsigned m) {
  detail::require_modulus(m, "phi_od");
  for (auto p : parts) {
    if (p % m == 0) {
      throw std::invalid_argument("phi_od: part " + std::to_string(p) + " is divisible by m");
    }
  }
  auto c = detail::count_parts(parts);
  // Merges only create larger keys, so one increasing sweep reaches the fixpoint.
  for (auto it = c.begin(); it != c.end(); ++it) {
    auto const q = it->second / m;
    if (q == 0) continue;
    c[it->first * m] += q;
    it->second %= m;
  }
  std::erase_if(c, [](auto const& kv) { return kv.second == 0; });
  return detail::from_counts(c);
}

/// D_m -> O_m: split every multiple of m into m equal parts until no part
/// is divisible by m.
inline PartList phi_do(PartList const& parts, unsigned m) {
  detail::require_modulus(m, "phi_do");
  auto const c = detail::count_parts(parts);
  detail::Counts out;
  for (auto [value, mult] : c) {
    if (mult >= m) {
      throw std::invalid_argument("phi_do: part " + std::to_string(value) + " appears " +
                                  std::to_string(mult) + " >= m times");
    }
    Part v = value;
    std::uint64_t copies = mult;
    while (v % m == 0) {
      v /= m;
      copies *= m;
    }
    out[v] += copies;
  }
  return detail::from_counts(out);
}

/// E_m -> N_m: each part km becomes m copies of k. One pass only; k may
/// itself be a multiple of m.
inline PartList psi_en(PartList const& parts, unsigned m) {
  detail::require_modulus(m, "psi_en");
  std::vector<Part> v;
  v.reserve(parts.size() * m);
  for (auto p : parts) {
    if (p % m != 0) {
      throw std::invalid_argument("psi_en: part " + std::to_string(p) + " is not divisible by m");
    }
    v.insert(v.end(), m, p / m);
  }
  return PartList(std::move(v));
}

/// N_m -> E_m: each block of m equal parts k becomes one part km.
inline PartList psi_ne(PartList const& parts, unsigned m) {
  detail::require_modulus(m, "psi_ne");
  auto const c = detail::count_parts(parts);
  detail::Counts out;
  for (auto [value, mult] : c) {
    if (mult % m != 0) {
      throw std::invalid_argument("psi_ne: part " + std::to_string(value) + " appears " +
                                  std::to_string(mult) + " times, not a multiple of m");
    }
    out[value * m] += mult / m;
  }
  return detail::from_counts(out);
}

/// sigma_m(M) = phi_od(M^o) U psi_en(M^e). sigma_1 is the identity.
inline Partition sigma(Partition const& lambda, unsigned m) {
  if (m == 0) throw std::invalid_argument("sigma: modulus must be >= 1");
  if (m == 1) return lambda;
  auto const split = decompose_oe(lambda.to_parts(), m);
  return Partition::from_parts(merge(phi_od(split.o_part, m), psi_en(split.e_part, m)));
}

/// sigma_m^{-1}(M) = phi_do(M^d) U psi_ne(M^n).
inline Partition sigma_inv(Partition const& lambda, unsigned m) {
  if (m == 0) throw std::invalid_argument("sigma_inv: modulus must be >= 1");
  if (m == 1) return lambda;
  auto const split = decompose_dn(lambda.to_parts(), m);
  return Partition::from_parts(merge(phi_do(split.d_part, m), psi_ne(split.n_part, m)));
}

}  // namespace partid
