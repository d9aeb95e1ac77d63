#pragma once

// Brute-force checkers: each sums both sides of an identity over every
// partition of n and returns an IdentityReport.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "partid/numeric.hpp"
#include "partid/partitions.hpp"
#include "partid/report.hpp"
#include "partid/statistics.hpp"

namespace partid {

namespace detail {

inline void require_positive(std::uint64_t v, char const* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

inline IdentityReport make_report(IdentityId id, std::uint64_t n, unsigned m) {
  IdentityReport r;
  r.identity = id;
  r.n = n;
  r.m = m;
  return r;
}

/// (-1)^{sum_i t_{im}} and (-1)^{sum_i floor(t_i/m)}.
inline int multiple_sign(Partition const& p, unsigned m) {
  std::uint64_t s = 0;
  for (auto const& e : p.entries())
    if (e.part % m == 0) s += e.mult;
  return sign_pow(-1, s);
}

inline int floor_sign(Partition const& p, unsigned m) {
  std::uint64_t s = 0;
  for (auto const& e : p.entries()) s += e.mult / m;
  return sign_pow(-1, s);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-k identities

/// sum_{P_n} t_{km} = sum_{P_n} floor(t_k / m)
inline IdentityReport check_per_k(unsigned n, unsigned m, std::uint64_t k) {
  detail::require_positive(m, "m");
  detail::require_positive(k, "k");
  detail::Stopwatch sw;
  BigInt lhs = 0, rhs = 0;
  for_each_partition(n, [&](Partition const& p) {
    lhs += p.multiplicity(k * m);
    rhs += p.multiplicity(k) / m;
  });
  auto r = detail::make_report(IdentityId::per_k, n, m);
  r.k = k;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

/// sum_{P_n} t_{km} = sum_{P_n} floor(t_1 / km)
inline IdentityReport check_per_k_first(unsigned n, unsigned m, std::uint64_t k) {
  detail::require_positive(m, "m");
  detail::require_positive(k, "k");
  detail::Stopwatch sw;
  BigInt lhs = 0, rhs = 0;
  for_each_partition(n, [&](Partition const& p) {
    lhs += p.multiplicity(k * m);
    rhs += p.multiplicity(1) / (k * m);
  });
  auto r = detail::make_report(IdentityId::per_k_first, n, m);
  r.k = k;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

/// sum (-1)^{t_m + t_2m + ...} t_{km} = sum (-1)^{sum_i floor(t_i/m)} floor(t_k/m)
inline IdentityReport check_per_k_signed(unsigned n, unsigned m, std::uint64_t k) {
  detail::require_positive(m, "m");
  detail::require_positive(k, "k");
  detail::Stopwatch sw;
  BigInt lhs = 0, rhs = 0;
  for_each_partition(n, [&](Partition const& p) {
    lhs += detail::multiple_sign(p, m) * static_cast<long long>(p.multiplicity(k * m));
    rhs += detail::floor_sign(p, m) * static_cast<long long>(p.multiplicity(k) / m);
  });
  auto r = detail::make_report(IdentityId::per_k_signed, n, m);
  r.k = k;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

// ---------------------------------------------------------------------------
// Power-weighted sums over k with coefficients s_k k^z, s_k = sign^{k+1}

enum class PowerVariant { multiplicity, first, signed_ };

inline IdentityId identity_of(PowerVariant v) {
  switch (v) {
    case PowerVariant::multiplicity: return IdentityId::power_multiplicity;
    case PowerVariant::first: return IdentityId::power_first;
    case PowerVariant::signed_: return IdentityId::power_signed;
  }
  return IdentityId::power_multiplicity;
}

namespace detail {

/// coeff[k] = s_k k^z for k = 1..n (index 0 unused). T is the scalar type.
template <typename T, typename PowFn>
std::vector<T> power_coefficients(unsigned n, int sign, PowFn pow_k) {
  std::vector<T> c(n + 1, T{0});
  for (unsigned k = 1; k <= n; ++k) {
    T v = pow_k(k);
    if (sign < 0 && k % 2 == 0) v = -v;
    c[k] = v;
  }
  return c;
}

template <typename T>
std::pair<T, T> power_sides(unsigned n, unsigned m, std::vector<T> const& coeff, PowerVariant variant) {
  T lhs{0}, rhs{0};
  for_each_partition(n, [&](Partition const& p) {
    T l{0}, r{0};
    auto const t1 = p.multiplicity(1);
    for (auto const& e : p.entries()) {
      if (e.part % m == 0) l += coeff[e.part / m] * T(e.mult);
      if (variant != PowerVariant::first && e.mult >= m) r += coeff[e.part] * T(e.mult / m);
    }
    if (variant == PowerVariant::first) {
      for (std::uint64_t k = 1; k * m <= t1; ++k) r += coeff[k] * T(t1 / (k * m));
    }
    if (variant == PowerVariant::signed_) {
      l *= T(multiple_sign(p, m));
      r *= T(floor_sign(p, m));
    }
    lhs += l;
    rhs += r;
  });
  return {lhs, rhs};
}

}  // namespace detail

/// Both sides evaluated in double-precision complex arithmetic with
/// k^z = exp(z ln k).
inline IdentityReport check_merca(unsigned n, unsigned m, std::complex<double> z, int sign,
                                  PowerVariant variant) {
  detail::require_positive(m, "m");
  detail::require_sign(sign);
  detail::Stopwatch sw;
  using C = std::complex<double>;
  auto const coeff = detail::power_coefficients<C>(
      n, sign, [&](unsigned k) { return k == 1 ? C{1.0} : std::exp(z * std::log(static_cast<double>(k))); });
  auto [lhs, rhs] = detail::power_sides<C>(n, m, coeff, variant);
  auto r = detail::make_report(identity_of(variant), n, m);
  r.sign = sign;
  r.z = z;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

/// Exact integer evaluation for a nonnegative integer exponent z.
inline IdentityReport check_merca_exact(unsigned n, unsigned m, unsigned z, int sign, PowerVariant variant) {
  detail::require_positive(m, "m");
  detail::require_sign(sign);
  detail::Stopwatch sw;
  auto const coeff = detail::power_coefficients<BigInt>(n, sign, [&](unsigned k) { return ipow(BigInt(k), z); });
  auto [lhs, rhs] = detail::power_sides<BigInt>(n, m, coeff, variant);
  auto r = detail::make_report(identity_of(variant), n, m);
  r.sign = sign;
  r.z = std::complex<double>(z, 0.0);
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

/// The same two sides assembled from the exact per-k sums:
/// side = sum_k s_k k^z * (per-k side). Valid for every complex z.
inline std::pair<std::complex<double>, std::complex<double>> merca_via_per_k(unsigned n, unsigned m,
                                                                             std::complex<double> z, int sign,
                                                                             PowerVariant variant) {
  detail::require_sign(sign);
  using C = std::complex<double>;
  C lhs{0.0}, rhs{0.0};
  for (unsigned k = 1; k <= n; ++k) {
    C w = k == 1 ? C{1.0} : std::exp(z * std::log(static_cast<double>(k)));
    if (sign < 0 && k % 2 == 0) w = -w;
    IdentityReport per;
    switch (variant) {
      case PowerVariant::multiplicity: per = check_per_k(n, m, k); break;
      case PowerVariant::first: per = check_per_k_first(n, m, k); break;
      case PowerVariant::signed_: per = check_per_k_signed(n, m, k); break;
    }
    lhs += w * std::get<BigInt>(per.lhs).convert_to<double>();
    rhs += w * std::get<BigInt>(per.rhs).convert_to<double>();
  }
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Weighted sign sums

enum class WeightVariant { multiplicity, residual };

/// multiplicity: sum sign^{alpha_sum} beta  = sum sign^{alpha'_sum} beta'
/// residual:     sum sign^{alpha_sum} gamma_o = sum sign^{alpha'_sum} gamma_d
inline IdentityReport check_am_general(unsigned n, unsigned m, int sign, WeightVariant variant) {
  detail::require_positive(m, "m");
  detail::require_sign(sign);
  detail::Stopwatch sw;
  BigInt lhs = 0, rhs = 0;
  for_each_partition(n, [&](Partition const& p) {
    auto const s = stat_vector(p, m);
    auto const wl = variant == WeightVariant::multiplicity ? s.beta : s.gamma_o;
    auto const wr = variant == WeightVariant::multiplicity ? s.beta_floor : s.gamma_d;
    lhs += sign_pow(sign, s.alpha_sum) * static_cast<long long>(wl);
    rhs += sign_pow(sign, s.alpha_floor_sum) * static_cast<long long>(wr);
  });
  auto r = detail::make_report(
      variant == WeightVariant::multiplicity ? IdentityId::weighted_multiplicity : IdentityId::residual_weight, n, m);
  r.sign = sign;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

// ---------------------------------------------------------------------------
// Joint generating polynomials

/// Exponent vector (x_1..x_n) plus the z exponent.
struct JointMonomial {
  std::vector<std::uint64_t> x;
  std::uint64_t z = 0;
  friend auto operator<=>(JointMonomial const&, JointMonomial const&) = default;
};

using JointPolynomial = std::map<JointMonomial, BigInt>;

/// sum_{P_n} prod_k x_k^{alpha_k} z^{gamma_o}, or the primed version
/// with alpha'_k and gamma_d.
inline JointPolynomial joint_polynomial(unsigned n, unsigned m, bool primed) {
  JointPolynomial poly;
  for_each_partition(n, [&](Partition const& p) {
    auto const s = stat_vector(p, m);
    JointMonomial mono;
    mono.x.assign(n, 0);
    for (std::uint64_t k = 1; k <= n; ++k) mono.x[k - 1] = primed ? s.alpha_floor_at(k) : s.alpha_at(k);
    mono.z = primed ? s.gamma_d : s.gamma_o;
    poly[std::move(mono)] += 1;
  });
  return poly;
}

namespace detail {

inline Rational evaluate(JointPolynomial const& poly, std::vector<Rational> const& xs, Rational const& z) {
  Rational total = 0;
  for (auto const& [mono, count] : poly) {
    Rational term = ipow(z, mono.z);
    for (std::size_t i = 0; i < mono.x.size(); ++i) {
      if (mono.x[i]) term *= ipow(xs[i], mono.x[i]);
    }
    total += term * count;
  }
  return total;
}

}  // namespace detail

/// Both joint polynomials evaluated exactly at (x_1..x_n, z).
inline IdentityReport check_bnew1_eval(unsigned n, unsigned m, std::vector<Rational> const& xs, Rational const& z,
                                       std::optional<std::uint64_t> seed = std::nullopt) {
  detail::require_positive(m, "m");
  if (xs.size() != n) throw std::invalid_argument("check_bnew1_eval: need exactly n x-values");
  detail::Stopwatch sw;
  auto const lhs = detail::evaluate(joint_polynomial(n, m, false), xs, z);
  auto const rhs = detail::evaluate(joint_polynomial(n, m, true), xs, z);
  auto r = detail::make_report(IdentityId::equidist_eval, n, m);
  std::vector<Rational> point = xs;
  point.push_back(z);
  r.point = std::move(point);
  r.seed = seed;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

/// Statistic transport over all of P_n: lhs = p(n), rhs = the number of
/// partitions whose (alpha, gamma_o) reappear as (alpha', gamma_d) on
/// their sigma_m image.
inline IdentityReport check_bnew1_transport(unsigned n, unsigned m) {
  detail::require_positive(m, "m");
  detail::Stopwatch sw;
  BigInt total = 0, ok = 0;
  for_each_partition(n, [&](Partition const& p) {
    ++total;
    if (m == 1 || transport_check(p, m)) ++ok;
  });
  auto r = detail::make_report(IdentityId::equidist_transport, n, m);
  detail::settle(r, total, ok);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

/// (alpha_sum, beta, gamma) -> count.
using TrivariatePolynomial = std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, BigInt>;

inline TrivariatePolynomial trivariate_polynomial(unsigned n, unsigned m, bool primed) {
  TrivariatePolynomial poly;
  for_each_partition(n, [&](Partition const& p) {
    auto const s = stat_vector(p, m);
    if (primed) {
      poly[{s.alpha_floor_sum, s.beta_floor, s.gamma_d}] += 1;
    } else {
      poly[{s.alpha_sum, s.beta, s.gamma_o}] += 1;
    }
  });
  return poly;
}

inline IdentityReport check_dnew1_eval(unsigned n, unsigned m, Rational const& x, Rational const& y,
                                       Rational const& z, std::optional<std::uint64_t> seed = std::nullopt) {
  detail::require_positive(m, "m");
  detail::Stopwatch sw;
  auto eval = [&](TrivariatePolynomial const& poly) {
    Rational total = 0;
    for (auto const& [e, c] : poly) {
      auto const& [a, b, g] = e;
      total += ipow(x, a) * ipow(y, b) * ipow(z, g) * c;
    }
    return total;
  };
  auto const lhs = eval(trivariate_polynomial(n, m, false));
  auto const rhs = eval(trivariate_polynomial(n, m, true));
  auto r = detail::make_report(IdentityId::trivariate_eval, n, m);
  r.point = std::vector<Rational>{x, y, z};
  r.seed = seed;
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

enum class DerivativeVariable { y, z };

/// d/dy or d/dz of both trivariate polynomials at (x, y, z) = (sign, 1, 1),
/// read off the coefficients: sum c * b * sign^a (resp. c * g * sign^a).
inline IdentityReport check_dnew_derivative(unsigned n, unsigned m, int sign, DerivativeVariable var) {
  detail::require_positive(m, "m");
  detail::require_sign(sign);
  detail::Stopwatch sw;
  auto derive = [&](TrivariatePolynomial const& poly) {
    BigInt total = 0;
    for (auto const& [e, c] : poly) {
      auto const& [a, b, g] = e;
      auto const w = var == DerivativeVariable::y ? b : g;
      total += c * static_cast<long long>(w) * sign_pow(sign, a);
    }
    return total;
  };
  auto r = detail::make_report(var == DerivativeVariable::y ? IdentityId::derivative_y : IdentityId::derivative_z,
                               n, m);
  r.sign = sign;
  detail::settle(r, derive(trivariate_polynomial(n, m, false)), derive(trivariate_polynomial(n, m, true)));
  r.elapsed_us = sw.elapsed_us();
  return r;
}

}  // namespace partid
