#pragma once

// Partitions with at most one decorated ("drawn") part, the weights W and
// W~ on them, and the restricted identities over parts {1, m, 2m, ...}.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partid/counting.hpp"
#include "partid/identities.hpp"
#include "partid/linear_form.hpp"
#include "partid/partitions.hpp"
#include "partid/report.hpp"

namespace partid {

/// The decoration is a part value and always sits on its first occurrence,
/// so (2,1~,1) and (2,1,1~) are one object.
class DecoratedPartition {
 public:
  explicit DecoratedPartition(PartList base, std::optional<Part> drawn = std::nullopt)
      : base_(std::move(base)), drawn_(drawn) {
    if (drawn_ && base_.count(*drawn_) == 0) {
      throw std::invalid_argument("DecoratedPartition: drawn part " + std::to_string(*drawn_) +
                                  " does not occur");
    }
  }

  PartList const& base() const noexcept { return base_; }
  std::optional<Part> const& drawn() const noexcept { return drawn_; }

  friend bool operator==(DecoratedPartition const&, DecoratedPartition const&) = default;

 private:
  PartList base_;
  std::optional<Part> drawn_;
};

/// "3~,1": the first copy of the drawn value carries a '~'.
inline std::string to_string(DecoratedPartition const& d) {
  std::string s;
  bool marked = false;
  for (std::size_t i = 0; i < d.base().size(); ++i) {
    auto const p = d.base().parts()[i];
    if (i) s += ',';
    s += std::to_string(p);
    if (!marked && d.drawn() && *d.drawn() == p) {
      s += '~';
      marked = true;
    }
  }
  return s;
}

/// For each partition of n (in enumeration order): the plain copy, then
/// one decorated copy per distinct value, largest value first.
template <typename F>
void for_each_decorated(unsigned n, F&& f) {
  for_each_partition(n, [&](Partition const& p) {
    auto parts = p.to_parts();
    f(DecoratedPartition(parts));
    for (auto it = p.entries().rbegin(); it != p.entries().rend(); ++it) {
      f(DecoratedPartition(parts, it->part));
    }
  });
}

inline std::vector<DecoratedPartition> enumerate_decorated(unsigned n) {
  std::vector<DecoratedPartition> out;
  for_each_decorated(n, [&](DecoratedPartition const& d) { out.push_back(d); });
  return out;
}

/// One x_v per non-drawn part occurrence v.
inline LinearForm weight_W(DecoratedPartition const& d) {
  LinearForm f;
  bool skipped = false;
  for (auto p : d.base()) {
    if (!skipped && d.drawn() && *d.drawn() == p) {
      skipped = true;
      continue;
    }
    f.add(p, 1);
  }
  return f;
}

/// sum_{j=1}^{v} floor(v/j) x_j for the drawn value v; zero if undecorated.
inline LinearForm weight_Wtilde(DecoratedPartition const& d) {
  LinearForm f;
  if (!d.drawn()) return f;
  auto const v = *d.drawn();
  for (Part j = 1; j <= v; ++j) f.add(j, v / j);
  return f;
}

/// sum_{k=j}^{n} floor(k/j) p(n-k); zero when j > n.
inline BigInt coefficient_formula(unsigned n, unsigned j, CountTable const& p) {
  if (j == 0) throw std::invalid_argument("coefficient_formula: j must be >= 1");
  if (p.size() <= n) throw std::invalid_argument("coefficient_formula: count table too short");
  BigInt s = 0;
  for (unsigned k = j; k <= n; ++k) s += p[n - k] * (k / j);
  return s;
}

inline BigInt coefficient_formula(unsigned n, unsigned j) {
  return coefficient_formula(n, j, partition_count(n));
}

/// sum W = sum W~ over all decorated partitions of n.
inline IdentityReport check_e3(unsigned n) {
  detail::Stopwatch sw;
  LinearForm lhs, rhs;
  for_each_decorated(n, [&](DecoratedPartition const& d) {
    lhs += weight_W(d);
    rhs += weight_Wtilde(d);
  });
  auto r = detail::make_report(IdentityId::decorated_weights, n, 0);
  detail::settle(r, lhs, rhs);
  r.elapsed_us = sw.elapsed_us();
  return r;
}

// ---------------------------------------------------------------------------
// Restricted solutions: t_1 + m t_m + 2m t_2m + ... = l with m | t_1.

struct RestrictedSums {
  BigInt count;
  LinearForm multiplicity_side;  // sum of x_1 t_m + x_2 t_2m + ...
  LinearForm floor_side;         // sum of x_1 floor(t_1/m) + x_2 floor(t_1/2m) + ...
};

namespace detail {

class RestrictedSolver {
 public:
  explicit RestrictedSolver(unsigned m) : m_(m) {}

  /// Sums over solutions of weight `rem` using parts jm, (j-1)m, ..., m, 1.
  RestrictedSums const& solve(std::uint64_t rem, std::uint64_t j) {
    auto key = std::make_pair(rem, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RestrictedSums out;
    if (j == 0) {
      // Leftover weight is t_1.
      if (rem % m_ == 0) {
        out.count = 1;
        for (std::uint64_t k = 1; k * m_ <= rem; ++k) out.floor_side.add(k, rem / (k * m_));
      } else {
        out.count = 0;
      }
    } else {
      out.count = 0;
      std::uint64_t const part = j * m_;
      for (std::uint64_t c = 0; c * part <= rem; ++c) {
        auto const& sub = solve(rem - c * part, j - 1);
        if (sub.count == 0) continue;
        out.count += sub.count;
        out.multiplicity_side += sub.multiplicity_side;
        out.multiplicity_side.add(j, sub.count * c);
        out.floor_side += sub.floor_side;
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  unsigned m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, RestrictedSums> memo_;
};

}  // namespace detail

inline RestrictedSums restricted_sums(std::uint64_t l, unsigned m) {
  detail::require_modulus(m, "restricted_sums");
  detail::RestrictedSolver solver(m);
  return solver.solve(l, l / m);
}

inline IdentityReport check_e2(unsigned l, unsigned m) {
  detail::require_modulus(m, "check_e2");
  detail::Stopwatch sw;
  auto sums = restricted_sums(l, m);
  auto r = detail::make_report(IdentityId::restricted_refinement, l, m);
  detail::settle(r, std::move(sums.multiplicity_side), std::move(sums.floor_side));
  r.elapsed_us = sw.elapsed_us();
  return r;
}

enum class ConvolutionSide { multiplicity, floor };

/// Direct sum over P_n against sum_l p_m(n-l) * (restricted sum at l).
inline IdentityReport check_convolution(unsigned n, unsigned m, ConvolutionSide side) {
  detail::require_modulus(m, "check_convolution");
  detail::Stopwatch sw;
  LinearForm direct;
  for_each_partition(n, [&](Partition const& p) {
    if (side == ConvolutionSide::multiplicity) {
      for (auto const& e : p.entries())
        if (e.part % m == 0) direct.add(e.part / m, e.mult);
    } else {
      auto const t1 = p.multiplicity(1);
      for (std::uint64_t k = 1; k * m <= t1; ++k) direct.add(k, t1 / (k * m));
    }
  });
  auto const pm = restricted_count(n, m);
  detail::RestrictedSolver solver(m);
  LinearForm conv;
  for (unsigned l = 0; l <= n; ++l) {
    auto const& s = solver.solve(l, l / m);
    conv += (side == ConvolutionSide::multiplicity ? s.multiplicity_side : s.floor_side) * pm[n - l];
  }
  auto r = detail::make_report(
      side == ConvolutionSide::multiplicity ? IdentityId::convolution_multiplicity : IdentityId::convolution_floor, n,
      m);
  detail::settle(r, std::move(direct), std::move(conv));
  r.elapsed_us = sw.elapsed_us();
  return r;
}

}  // namespace partid
