#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "partid/statistics.hpp"

using namespace partid;

TEST_CASE("residue", "[statistics]") {
  CHECK(residue(7, 3) == 1);
  CHECK(residue(6, 3) == 0);
  CHECK(residue(5, 2) == 1);
  CHECK_THROWS_AS(residue(5, 0), std::invalid_argument);
  for (std::uint64_t x = 0; x < 50; ++x)
    for (unsigned m = 1; m <= 7; ++m) REQUIRE(residue(x, m) + m * (x / m) == x);
}

TEST_CASE("stat_vector on the worked pair", "[statistics]") {
  auto const src = Partition::from_parts(PartList{1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 5, 6});
  auto const s = stat_vector(src, 3);
  CHECK(s.n == 34);
  CHECK(s.gamma_o == 22);
  CHECK(s.alpha_at(1) == 2);
  CHECK(s.alpha_at(2) == 1);
  CHECK(s.alpha_at(3) == 0);
  CHECK(s.beta == 4);
  CHECK(s.gamma_o + 3 * s.beta == 34);

  auto const img = stat_vector(sigma(src, 3), 3);
  CHECK(img.gamma_d == 22);
  CHECK(img.alpha_floor_at(1) == 2);
  CHECK(img.alpha_floor_at(2) == 1);
  CHECK(img.alpha_floor_at(3) == 0);

  auto const e = stat_vector(Partition{}, 2);
  CHECK(e.gamma_o == 0);
  CHECK(e.gamma_d == 0);
  CHECK(e.beta == 0);
  CHECK(e.alpha_sum == 0);

  CHECK(transport_check(src, 3));
  CHECK(transport_check(Partition{}, 2));
}

TEST_CASE("stat_vector against definitions", "[statistics][property]") {
  for (unsigned n = 0; n <= 18; ++n) {
    for (auto const& t : oracle::partitions(n)) {
      auto const p = oracle::to_partition(t);
      for (unsigned m = 1; m <= 6; ++m) {
        auto const s = stat_vector(p, m);
        std::uint64_t a_sum = 0, af_sum = 0, beta = 0, beta_f = 0, go = 0, gd = 0;
        for (std::uint64_t k = 1; k <= n; ++k) {
          REQUIRE(s.alpha_at(k) == oracle::at(t, k * m));
          REQUIRE(s.alpha_floor_at(k) == oracle::at(t, k) / m);
          a_sum += oracle::at(t, k * m);
          beta += k * oracle::at(t, k * m);
          af_sum += oracle::at(t, k) / m;
          beta_f += k * (oracle::at(t, k) / m);
          if (k % m != 0) go += k * oracle::at(t, k);
        }
        // gamma_d through the D/N split of the part list
        if (m >= 2) gd = decompose_dn(p.to_parts(), m).d_part.weight();
        REQUIRE(s.alpha_sum == a_sum);
        REQUIRE(s.alpha_floor_sum == af_sum);
        REQUIRE(s.beta == beta);
        REQUIRE(s.beta_floor == beta_f);
        REQUIRE(s.gamma_o == go);
        if (m >= 2) REQUIRE(s.gamma_d == gd);
        REQUIRE(s.gamma_o + m * s.beta == n);
        REQUIRE(s.gamma_d + m * s.beta_floor == n);
        if (m == 1) {
          REQUIRE(s.gamma_o == 0);
          REQUIRE(s.gamma_d == 0);
          for (std::uint64_t k = 1; k <= n; ++k) REQUIRE(s.alpha_at(k) == s.alpha_floor_at(k));
        }
      }
    }
  }
}

TEST_CASE("transport holds on every partition", "[statistics][property]") {
  for (unsigned n = 0; n <= 20; ++n)
    for_each_partition(n, [&](Partition const& p) {
      for (unsigned m = 2; m <= 6; ++m) REQUIRE(transport_check(p, m));
    });
}
