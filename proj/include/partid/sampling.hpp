#pragma once

// Seeded sample points. Only raw mt19937_64 output is used (its sequence is
// fixed by the standard), never std::*_distribution, so a seed reproduces
// the same points on every standard library.

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "partid/numeric.hpp"

namespace partid {

inline std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t n, std::uint64_t m) {
  return std::mt19937_64(seed ^ (n * 0x9E3779B97F4A7C15ULL) ^ (m * 0xC2B2AE3D27D4EB4FULL));
}

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Numerator in [-5,5]\{0}, denominator in [1,5].
inline Rational small_rational(std::mt19937_64& rng) {
  auto const r = static_cast<long>(rng() % 10);
  long const num = r < 5 ? -(r + 1) : r - 4;
  long const den = static_cast<long>(rng() % 5) + 1;
  return Rational(num, den);
}

inline std::vector<Rational> sample_rational_point(std::mt19937_64& rng, std::size_t count) {
  std::vector<Rational> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.push_back(small_rational(rng));
  return v;
}

/// Uniform in the closed disc |z| <= radius (area-uniform).
inline std::complex<double> sample_complex(std::mt19937_64& rng, double radius) {
  double const r = radius * std::sqrt(unit_double(rng));
  double const theta = 2.0 * std::numbers::pi * unit_double(rng);
  return std::polar(r, theta);
}

}  // namespace partid
