#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "partid/counting.hpp"
#include "partid/partitions.hpp"

using namespace partid;

TEST_CASE("partition_count", "[counting]") {
  CHECK(partition_count(0).values == std::vector<BigInt>{1});
  CHECK(partition_count(5).values == std::vector<BigInt>{1, 1, 2, 3, 5, 7});
  CHECK(partition_count(30)[30] == 5604);
}

TEST_CASE("pentagonal recurrence matches enumeration and the product oracle", "[counting]") {
  auto const p = partition_count(60);
  auto const ref = oracle::partition_numbers(60);
  for (unsigned n = 0; n <= 60; ++n) REQUIRE(p[n] == ref[n]);
  for (unsigned n = 0; n <= 30; ++n) REQUIRE(p[n] == enumerate_partitions(n).size());
  for (unsigned n = 2; n <= 60; ++n) REQUIRE(p[n] >= p[n - 1]);
  // exact beyond 64 bits
  CHECK(partition_count(500)[500].str() == "2300165032574323995027");
}

TEST_CASE("restricted_count", "[counting]") {
  CHECK(restricted_count(0, 3).values == std::vector<BigInt>{1});
  CHECK(restricted_count(3, 2)[3] == 1);
  CHECK(restricted_count(4, 2)[4] == 1);
  // oracle-computed by filtering P_n
  std::vector<BigInt> const pm2{1, 1, 0, 1, 1, 1, 2, 2, 2, 3, 4};
  std::vector<BigInt> const pm3{1, 1, 2, 1, 3, 3, 5, 5, 8, 9, 13};
  CHECK(restricted_count(10, 2).values == pm2);
  CHECK(restricted_count(10, 3).values == pm3);
  CHECK_THROWS_AS(restricted_count(5, 1), std::invalid_argument);
}

namespace {

bool restricted(Partition const& p, unsigned m) {
  for (auto const& e : p.entries())
    if (e.part % m == 0) return false;
  return p.multiplicity(1) < m;
}

}  // namespace

TEST_CASE("restricted_count matches filtered enumeration", "[counting]") {
  for (unsigned m = 2; m <= 6; ++m) {
    auto const pm = restricted_count(25, m);
    for (unsigned n = 0; n <= 25; ++n) {
      std::size_t c = 0;
      for_each_partition(n, [&](Partition const& p) { c += restricted(p, m); });
      REQUIRE(pm[n] == c);
    }
  }
}

TEST_CASE("p_m convolved with the {1, m, 2m, ...} count gives p(n)", "[counting]") {
  auto const p = partition_count(25);
  for (unsigned m = 2; m <= 6; ++m) {
    auto const pm = restricted_count(25, m);
    // r_m(l): parts in {1, m, 2m, ...} with m | t_1
    std::vector<BigInt> r(26, 0);
    for (unsigned l = 0; l <= 25; ++l) {
      for_each_partition(l, [&](Partition const& q) {
        for (auto const& e : q.entries())
          if (e.part != 1 && e.part % m != 0) return;
        if (q.multiplicity(1) % m == 0) r[l] += 1;
      });
    }
    for (unsigned n = 0; n <= 25; ++n) {
      BigInt s = 0;
      for (unsigned l = 0; l <= n; ++l) s += pm[n - l] * r[l];
      REQUIRE(s == p[n]);
    }
  }
}
