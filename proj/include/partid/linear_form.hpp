#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "partid/numeric.hpp"

namespace partid {

/// Finitely supported integer combination of formal symbols x_1, x_2, ...
/// Zero coefficients are never stored, so equality is structural.
class LinearForm {
 public:
  using Map = std::map<std::uint64_t, BigInt>;

  LinearForm() = default;

  static LinearForm symbol(std::uint64_t j, BigInt c = 1) {
    LinearForm f;
    f.add(j, std::move(c));
    return f;
  }

  void add(std::uint64_t j, BigInt const& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  BigInt coefficient(std::uint64_t j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? BigInt{0} : it->second;
  }

  Map const& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  LinearForm& operator+=(LinearForm const& o) {
    for (auto const& [j, c] : o.coeffs_) add(j, c);
    return *this;
  }

  LinearForm& operator*=(BigInt const& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& kv : coeffs_) kv.second *= s;
    }
    return *this;
  }

  friend LinearForm operator+(LinearForm a, LinearForm const& b) { return a += b; }
  friend LinearForm operator*(LinearForm a, BigInt const& s) { return a *= s; }
  friend bool operator==(LinearForm const&, LinearForm const&) = default;

 private:
  Map coeffs_;
};

/// "3x_1+x_2+x_3", "x_1-2x_4", or "0".
inline std::string to_string(LinearForm const& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto const& [j, c] : f.coefficients()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      s += '-';
    } else if (!first) {
      s += '+';
    }
    if (mag != 1) s += mag.str();
    s += "x_" + std::to_string(j);
    first = false;
  }
  return s;
}

}  // namespace partid
