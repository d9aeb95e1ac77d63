#pragma once

// Partition statistics read off the multiplicity vector (t_1, ..., t_n).
//
//   alpha_k       = t_{km}            alpha'_k       = floor(t_k / m)
//   alpha_sum     = sum_k alpha_k     alpha'_sum     = sum_k alpha'_k
//   beta          = sum_k k alpha_k   beta'          = sum_k k alpha'_k
//   gamma_o       = weight of the parts not divisible by m
//   gamma_d       = sum_k k <t_k>_m   (weight of the D-part)
//
// sigma_m carries the unprimed family of lambda onto the primed family of
// sigma_m(lambda); transport_check tests exactly that.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "partid/partitions.hpp"
#include "partid/transforms.hpp"

namespace partid {

/// <x>_m, the least nonnegative residue.
inline std::uint64_t residue(std::uint64_t x, unsigned m) {
  if (m < 1) throw std::invalid_argument("residue: modulus must be >= 1");
  return x % m;
}

struct StatVector {
  std::uint64_t n = 0;
  unsigned m = 1;
  std::vector<std::uint64_t> alpha;        // index k-1, k = 1..floor(n/m)
  std::vector<std::uint64_t> alpha_floor;  // index k-1, k = 1..n
  std::uint64_t gamma_o = 0;
  std::uint64_t gamma_d = 0;
  std::uint64_t beta = 0;
  std::uint64_t beta_floor = 0;
  std::uint64_t alpha_sum = 0;
  std::uint64_t alpha_floor_sum = 0;

  std::uint64_t alpha_at(std::uint64_t k) const {
    return k >= 1 && k <= alpha.size() ? alpha[k - 1] : 0;
  }
  std::uint64_t alpha_floor_at(std::uint64_t k) const {
    return k >= 1 && k <= alpha_floor.size() ? alpha_floor[k - 1] : 0;
  }

  friend bool operator==(StatVector const&, StatVector const&) = default;
};

inline StatVector stat_vector(Partition const& lambda, unsigned m) {
  if (m < 1) throw std::invalid_argument("stat_vector: modulus must be >= 1");
  StatVector s;
  s.n = lambda.weight();
  s.m = m;
  s.alpha.assign(s.n / m, 0);
  s.alpha_floor.assign(s.n, 0);
  for (auto const& [part, t] : lambda.entries()) {
    if (part % m == 0) {
      auto const k = part / m;
      s.alpha[k - 1] = t;
      s.alpha_sum += t;
      s.beta += std::uint64_t{k} * t;
    } else {
      s.gamma_o += std::uint64_t{part} * t;
    }
    auto const fl = t / m;
    s.alpha_floor[part - 1] = fl;
    s.alpha_floor_sum += fl;
    s.beta_floor += std::uint64_t{part} * fl;
    s.gamma_d += std::uint64_t{part} * residue(t, m);
  }
  return s;
}

/// alpha_k(lambda) = alpha'_k(sigma_m(lambda)) for every k, and
/// gamma_o(lambda) = gamma_d(sigma_m(lambda)).
inline bool transport_check(Partition const& lambda, unsigned m) {
  detail::require_modulus(m, "transport_check");
  auto const src = stat_vector(lambda, m);
  auto const img = stat_vector(sigma(lambda, m), m);
  if (src.gamma_o != img.gamma_d) return false;
  for (std::uint64_t k = 1; k <= src.n; ++k) {
    if (src.alpha_at(k) != img.alpha_floor_at(k)) return false;
  }
  return true;
}

}  // namespace partid
