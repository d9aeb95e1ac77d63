#pragma once

// Integer partitions in two views (sparse multiplicity vector and
// nonincreasing part list), enumeration of all partitions of n, and the
// two modulus-m multiset decompositions used by the Glaisher-type maps.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partid {

using Part = std::uint32_t;

namespace detail {

inline void require_modulus(unsigned m, char const* where) {
  if (m < 2) {
    throw std::invalid_argument(std::string(where) + ": modulus must be >= 2, got " +
                                std::to_string(m));
  }
}

}  // namespace detail

/// A multiset of positive integers stored as a nonincreasing sequence.
class PartList {
 public:
  PartList() = default;

  /// Takes parts that are already nonincreasing and positive.
  explicit PartList(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("PartList: zero part");
      if (i > 0 && parts_[i - 1] < parts_[i]) {
        throw std::invalid_argument("PartList: parts must be nonincreasing");
      }
    }
  }

  PartList(std::initializer_list<Part> parts) : PartList(sorted(std::vector<Part>(parts))) {}

  /// Accepts parts in any order.
  static PartList sorted(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return PartList(std::move(parts));
  }

  std::vector<Part> const& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  std::uint64_t weight() const noexcept {
    std::uint64_t s = 0;
    for (auto p : parts_) s += p;
    return s;
  }

  /// Number of copies of `value`.
  std::size_t count(Part value) const noexcept {
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value, std::greater<>());
    return static_cast<std::size_t>(hi - lo);
  }

  friend bool operator==(PartList const&, PartList const&) = default;
  friend auto operator<=>(PartList const&, PartList const&) = default;

 private:
  std::vector<Part> parts_;
};

/// Multiset union.
inline PartList merge(PartList const& a, PartList const& b) {
  std::vector<Part> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
  return PartList(std::move(out));
}

/// Comma-separated wire form, e.g. "3,3,1". The empty list renders as "".
inline std::string to_string(PartList const& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

/// A partition of n in multiplicity form: t_i copies of part i. Only the
/// nonzero t_i are stored, in increasing order of part.
class Partition {
 public:
  struct Entry {
    Part part;
    std::uint32_t mult;
    friend bool operator==(Entry const&, Entry const&) = default;
    friend auto operator<=>(Entry const&, Entry const&) = default;
  };

  Partition() = default;

  static Partition from_parts(PartList const& parts) {
    Partition p;
    auto const& v = parts.parts();
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      if (!p.entries_.empty() && p.entries_.back().part == *it) {
        ++p.entries_.back().mult;
      } else {
        p.entries_.push_back({*it, 1});
      }
      p.n_ += *it;
    }
    return p;
  }

  /// Entries may come in any order; zero multiplicities are dropped and
  /// repeated parts are summed.
  static Partition from_multiplicities(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Partition p;
    for (auto const& e : entries) {
      if (e.part == 0) throw std::invalid_argument("Partition: zero part");
      if (e.mult == 0) continue;
      if (!p.entries_.empty() && p.entries_.back().part == e.part) {
        p.entries_.back().mult += e.mult;
      } else {
        p.entries_.push_back(e);
      }
      p.n_ += std::uint64_t{e.part} * e.mult;
    }
    return p;
  }

  std::uint64_t weight() const noexcept { return n_; }
  std::vector<Entry> const& entries() const noexcept { return entries_; }
  std::size_t distinct_parts() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// t_i; zero for absent parts.
  std::uint32_t multiplicity(std::uint64_t part) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                               [](Entry const& e, std::uint64_t v) { return e.part < v; });
    return (it != entries_.end() && it->part == part) ? it->mult : 0;
  }

  std::size_t length() const noexcept {
    std::size_t r = 0;
    for (auto const& e : entries_) r += e.mult;
    return r;
  }

  PartList to_parts() const {
    std::vector<Part> v;
    v.reserve(length());
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) v.insert(v.end(), it->mult, it->part);
    return PartList(std::move(v));
  }

  friend bool operator==(Partition const& a, Partition const& b) { return a.entries_ == b.entries_; }
  friend auto operator<=>(Partition const& a, Partition const& b) { return a.entries_ <=> b.entries_; }

 private:
  std::uint64_t n_ = 0;
  std::vector<Entry> entries_;
};

inline std::string to_string(Partition const& p) { return to_string(p.to_parts()); }

/// Walks the partitions of n in lexicographically decreasing order of
/// their part lists, optionally restricted to a fixed largest part.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(unsigned n) : pending_(true) {
    if (n != 0) parts_.assign(1, n);
  }

  /// Only partitions whose largest part equals `largest` (1 <= largest <= n).
  PartitionGenerator(unsigned n, unsigned largest) : fixed_largest_(largest) {
    if (largest == 0 || largest > n) {
      pending_ = false;
      return;
    }
    unsigned rem = n;
    while (rem >= largest) {
      parts_.push_back(largest);
      rem -= largest;
    }
    if (rem) parts_.push_back(rem);
    pending_ = true;
  }

  /// Current part list; valid after next() returned true.
  std::vector<Part> const& current() const noexcept { return parts_; }

  bool next() {
    if (pending_) {
      pending_ = false;
      return true;
    }
    if (!advance()) return false;
    if (fixed_largest_ != 0 && parts_.front() != fixed_largest_) return false;
    return true;
  }

 private:
  bool advance() {
    // Rightmost part greater than one; everything after it is a 1.
    std::size_t ones = 0;
    while (!parts_.empty() && parts_.back() == 1) {
      parts_.pop_back();
      ++ones;
    }
    if (parts_.empty()) return false;
    Part x = parts_.back() - 1;
    parts_.back() = x;
    std::size_t rem = ones + 1;
    while (rem >= x) {
      parts_.push_back(x);
      rem -= x;
    }
    if (rem) parts_.push_back(static_cast<Part>(rem));
    return true;
  }

  unsigned fixed_largest_ = 0;
  std::vector<Part> parts_;
  bool pending_ = false;
};

template <typename F>
void for_each_partition(unsigned n, F&& f) {
  PartitionGenerator gen(n);
  while (gen.next()) {
    std::forward<F>(f)(Partition::from_parts(PartList(gen.current())));
  }
}

/// Chunk of the enumeration with a fixed largest part, for callers that
/// shard the work. The chunks for largest = n, n-1, ..., 1 concatenate to
/// the full enumeration order.
template <typename F>
void for_each_partition_with_largest_part(unsigned n, unsigned largest, F&& f) {
  PartitionGenerator gen(n, largest);
  while (gen.next()) {
    std::forward<F>(f)(Partition::from_parts(PartList(gen.current())));
  }
}

inline std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition const& p) { out.push_back(p); });
  return out;
}

struct OESplit {
  PartList o_part;  // no element divisible by m
  PartList e_part;  // every element divisible by m
  unsigned m;
};

struct DNSplit {
  PartList d_part;  // every value appears fewer than m times
  PartList n_part;  // every multiplicity divisible by m
  unsigned m;
};

inline OESplit decompose_oe(PartList const& parts, unsigned m) {
  detail::require_modulus(m, "decompose_oe");
  std::vector<Part> o, e;
  for (auto p : parts) (p % m == 0 ? e : o).push_back(p);
  return {PartList(std::move(o)), PartList(std::move(e)), m};
}

inline DNSplit decompose_dn(PartList const& parts, unsigned m) {
  detail::require_modulus(m, "decompose_dn");
  std::vector<Part> d, nn;
  auto const& v = parts.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    std::size_t t = j - i;
    nn.insert(nn.end(), m * (t / m), v[i]);
    d.insert(d.end(), t % m, v[i]);
    i = j;
  }
  return {PartList(std::move(d)), PartList(std::move(nn)), m};
}

}  // namespace partid
