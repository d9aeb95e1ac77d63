#pragma once

// Result record shared by all identity checkers.

#include <array>
#include <chrono>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "partid/linear_form.hpp"
#include "partid/numeric.hpp"

namespace partid {

enum class IdentityId {
  per_k,                     // sum t_{km} = sum floor(t_k/m)
  per_k_first,               // sum t_{km} = sum floor(t_1/km)
  per_k_signed,              // signed by (-1)^{alpha_sum} / (-1)^{alpha'_sum}
  power_multiplicity,        // sum_k s_k k^z t_{km} vs sum_k s_k k^z floor(t_k/m)
  power_first,               // ... vs sum_k s_k k^z floor(t_1/km)
  power_signed,              // power_multiplicity with (-1)^{alpha_sum} weights
  weighted_multiplicity,     // sign^{alpha_sum} beta vs sign^{alpha'_sum} beta'
  residual_weight,           // sign^{alpha_sum} gamma_o vs sign^{alpha'_sum} gamma_d
  equidist_eval,             // joint (alpha, gamma) polynomials at a rational point
  equidist_transport,        // statistic transport under sigma_m, per partition
  trivariate_eval,           // x^{alpha_sum} y^{beta} z^{gamma} at a rational point
  derivative_y,              // d/dy of the trivariate polynomial at (sign, 1, 1)
  derivative_z,              // d/dz of the trivariate polynomial at (sign, 1, 1)
  decorated_weights,         // sum W = sum W~ over decorated partitions
  restricted_refinement,     // per-l identity over parts {1, m, 2m, ...} with m | t_1
  convolution_multiplicity,  // P_n multiplicity form = p_m convolution
  convolution_floor,         // P_n floor form = p_m convolution
};

inline constexpr std::array<IdentityId, 17> all_identities = {
    IdentityId::per_k,
    IdentityId::per_k_first,
    IdentityId::per_k_signed,
    IdentityId::power_multiplicity,
    IdentityId::power_first,
    IdentityId::power_signed,
    IdentityId::weighted_multiplicity,
    IdentityId::residual_weight,
    IdentityId::equidist_eval,
    IdentityId::equidist_transport,
    IdentityId::trivariate_eval,
    IdentityId::derivative_y,
    IdentityId::derivative_z,
    IdentityId::decorated_weights,
    IdentityId::restricted_refinement,
    IdentityId::convolution_multiplicity,
    IdentityId::convolution_floor,
};

inline std::string_view tag(IdentityId id) {
  switch (id) {
    case IdentityId::per_k: return "per-k";
    case IdentityId::per_k_first: return "per-k-first";
    case IdentityId::per_k_signed: return "per-k-signed";
    case IdentityId::power_multiplicity: return "power-multiplicity";
    case IdentityId::power_first: return "power-first";
    case IdentityId::power_signed: return "power-signed";
    case IdentityId::weighted_multiplicity: return "weighted-multiplicity";
    case IdentityId::residual_weight: return "residual-weight";
    case IdentityId::equidist_eval: return "equidist-eval";
    case IdentityId::equidist_transport: return "equidist-transport";
    case IdentityId::trivariate_eval: return "trivariate-eval";
    case IdentityId::derivative_y: return "derivative-y";
    case IdentityId::derivative_z: return "derivative-z";
    case IdentityId::decorated_weights: return "decorated-weights";
    case IdentityId::restricted_refinement: return "restricted-refinement";
    case IdentityId::convolution_multiplicity: return "convolution-multiplicity";
    case IdentityId::convolution_floor: return "convolution-floor";
  }
  return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
  for (auto id : all_identities) {
    if (tag(id) == s) return id;
  }
  return std::nullopt;
}

/// One side of an identity: exact integer, exact rational, floating
/// complex, or a formal linear form.
using Value = std::variant<BigInt, Rational, std::complex<double>, LinearForm>;

inline std::string to_string(Value const& v) {
  return std::visit(
      [](auto const& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::complex<double>>) {
          return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
        } else {
          return partid::to_string(x);
        }
      },
      v);
}

inline constexpr double numeric_tolerance = 1e-9;

struct IdentityReport {
  IdentityId identity{};
  std::uint64_t n = 0;
  unsigned m = 0;
  std::optional<std::uint64_t> k;
  std::optional<int> sign;
  std::optional<std::complex<double>> z;
  std::optional<std::vector<Rational>> point;
  std::optional<std::uint64_t> seed;
  Value lhs;
  Value rhs;
  bool pass = false;
  double residual = 0.0;
  std::int64_t elapsed_us = 0;
};

namespace detail {

inline void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

/// Fills lhs/rhs and the verdict: exact comparison for exact values,
/// relative tolerance for complex ones.
inline void settle(IdentityReport& r, Value lhs, Value rhs) {
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  if (auto const* a = std::get_if<std::complex<double>>(&r.lhs)) {
    auto const b = std::get<std::complex<double>>(r.rhs);
    r.residual = std::abs(*a - b);
    r.pass = r.residual <= numeric_tolerance * (1.0 + std::abs(*a));
  } else {
    r.pass = r.lhs == r.rhs;
    r.residual = 0.0;
  }
}

class Stopwatch {
 public:
  std::int64_t elapsed_us() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail
}  // namespace partid
