#pragma once

// Exact arithmetic types shared by every module.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace partid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(BigInt const& v) { return v.str(); }

// "p/q" with q > 0, or just "p" when the value is integral.
inline std::string to_string(Rational const& v) {
  auto const num = boost::multiprecision::numerator(v);
  auto const den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Integer power with 0^0 = 1; exponent is a statistic, never negative.
template <typename T>
T ipow(T base, unsigned long long exp) {
  T result{1};
  while (exp != 0) {
    if (exp & 1ULL) result *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return result;
}

inline int sign_pow(int sign, unsigned long long exp) {
  return (sign < 0 && (exp & 1ULL)) ? -1 : 1;
}

}  // namespace partid
