#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "partid/counting.hpp"
#include "partid/identities.hpp"
#include "partid/sampling.hpp"

using namespace partid;

namespace {

BigInt lhs_int(IdentityReport const& r) { return std::get<BigInt>(r.lhs); }
BigInt rhs_int(IdentityReport const& r) { return std::get<BigInt>(r.rhs); }

}  // namespace

TEST_CASE("check_per_k", "[identities]") {
  auto r = check_per_k(4, 2, 1);
  CHECK(r.pass);
  CHECK(lhs_int(r) == 3);
  CHECK(rhs_int(r) == 3);
  CHECK(r.k == 1u);
  CHECK(r.residual == 0.0);

  r = check_per_k(1, 2, 1);
  CHECK((r.pass && lhs_int(r) == 0));

  // m = 1: both sides are sum t_k
  for (unsigned k = 1; k <= 5; ++k) {
    auto const q = check_per_k(9, 1, k);
    BigInt s = 0;
    for (auto const& t : oracle::partitions(9)) s += oracle::at(t, k);
    CHECK(lhs_int(q) == s);
    CHECK(rhs_int(q) == s);
  }

  // frozen from an independent brute force
  r = check_per_k(20, 3, 2);
  CHECK(lhs_int(r) == 159);
  CHECK(r.pass);
  CHECK_THROWS_AS(check_per_k(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_per_k(3, 1, 0), std::invalid_argument);
}

TEST_CASE("check_per_k_first", "[identities]") {
  auto r = check_per_k_first(4, 2, 1);
  CHECK((r.pass && lhs_int(r) == 3));
  r = check_per_k_first(4, 2, 2);
  CHECK((r.pass && lhs_int(r) == 1));
  r = check_per_k_first(2, 2, 1);
  CHECK((r.pass && lhs_int(r) == 1));
  r = check_per_k_first(25, 2, 3);
  CHECK((r.pass && lhs_int(r) == 607));
}

TEST_CASE("check_per_k_signed", "[identities]") {
  auto r = check_per_k_signed(2, 2, 1);
  CHECK(lhs_int(r) == -1);
  CHECK(rhs_int(r) == -1);
  r = check_per_k_signed(1, 2, 1);
  CHECK((r.pass && lhs_int(r) == 0));
  CHECK(lhs_int(check_per_k_signed(20, 3, 2)) == -21);
  CHECK(lhs_int(check_per_k_signed(25, 2, 3)) == -3);
}

TEST_CASE("per-k identities, exhaustive desk range", "[identities][property]") {
  for (unsigned n = 1; n <= 16; ++n)
    for (unsigned m = 1; m <= 6; ++m)
      for (unsigned k = 1; k <= (n + m - 1) / m; ++k) {
        REQUIRE(check_per_k(n, m, k).pass);
        REQUIRE(check_per_k_first(n, m, k).pass);
        REQUIRE(check_per_k_signed(n, m, k).pass);
      }
}

TEST_CASE("check_merca", "[identities]") {
  auto const exact = check_merca_exact(10, 2, 0, 1, PowerVariant::multiplicity);
  CHECK(exact.pass);
  CHECK(lhs_int(exact) == 62);

  auto const num = check_merca(10, 2, {0.0, 0.0}, 1, PowerVariant::multiplicity);
  CHECK(std::get<std::complex<double>>(num.lhs) == std::complex<double>(62.0, 0.0));

  for (auto v : {PowerVariant::multiplicity, PowerVariant::first, PowerVariant::signed_}) {
    auto const r = check_merca(12, 3, {1.0, 2.0}, -1, v);
    auto const l = std::get<std::complex<double>>(r.lhs);
    auto const d = std::abs(l - std::get<std::complex<double>>(r.rhs));
    CHECK(r.pass);
    CHECK(d <= 1e-9 * (1.0 + std::abs(l)));
    CHECK(r.sign == -1);
  }
  CHECK_THROWS_AS(check_merca(3, 2, {}, 2, PowerVariant::first), std::invalid_argument);
}

TEST_CASE("power sums equal their per-k reduction", "[identities][property]") {
  auto rng = sample_stream(7, 0, 0);
  for (unsigned n : {6u, 11u, 15u}) {
    for (unsigned m = 1; m <= 4; ++m) {
      for (int sign : {1, -1}) {
        for (int s = 0; s < 3; ++s) {
          auto const z = sample_complex(rng, 2.0);
          for (auto v : {PowerVariant::multiplicity, PowerVariant::first, PowerVariant::signed_}) {
            auto const direct = check_merca(n, m, z, sign, v);
            auto const [l, r] = merca_via_per_k(n, m, z, sign, v);
            auto const dl = std::get<std::complex<double>>(direct.lhs);
            auto const dr = std::get<std::complex<double>>(direct.rhs);
            REQUIRE(std::abs(dl - l) <= 1e-12 * (1.0 + std::abs(l)));
            REQUIRE(std::abs(dr - r) <= 1e-12 * (1.0 + std::abs(r)));
          }
        }
      }
    }
  }
}

TEST_CASE("exact power sums for integer z", "[identities]") {
  for (unsigned z = 0; z <= 3; ++z)
    for (unsigned m = 2; m <= 4; ++m)
      for (int sign : {1, -1})
        for (auto v : {PowerVariant::multiplicity, PowerVariant::first, PowerVariant::signed_}) {
          auto const e = check_merca_exact(14, m, z, sign, v);
          REQUIRE(e.pass);
          auto const c = check_merca(14, m, {double(z), 0.0}, sign, v);
          REQUIRE(std::abs(std::get<std::complex<double>>(c.lhs) - lhs_int(e).convert_to<double>()) < 1e-6);
        }
}


TEST_CASE("check_am_general", "[identities]") {
  auto a = check_am_general(6, 2, -1, WeightVariant::multiplicity);
  CHECK((a.pass && lhs_int(a) == -5));
  auto b = check_am_general(6, 2, -1, WeightVariant::residual);
  CHECK((b.pass && lhs_int(b) == 16));
  CHECK(lhs_int(check_am_general(10, 2, 1, WeightVariant::multiplicity)) == 95);
  CHECK(lhs_int(check_am_general(10, 2, 1, WeightVariant::residual)) == 230);

  for (unsigned m = 2; m <= 6; ++m)
    for (int sign : {1, -1}) {
      auto const r1 = check_am_general(1, m, sign, WeightVariant::multiplicity);
      CHECK((r1.pass && lhs_int(r1) == 0));
      auto const r2 = check_am_general(1, m, sign, WeightVariant::residual);
      CHECK((r2.pass && lhs_int(r2) == 1));
    }

  for (unsigned n = 1; n <= 18; ++n)
    for (int sign : {1, -1}) {
      auto const c = oracle::classical_m2(n, sign);
      auto const w = check_am_general(n, 2, sign, WeightVariant::multiplicity);
      auto const g = check_am_general(n, 2, sign, WeightVariant::residual);
      REQUIRE(lhs_int(w) == c[0]);
      REQUIRE(rhs_int(w) == c[1]);
      REQUIRE(lhs_int(g) == c[2]);
      REQUIRE(rhs_int(g) == c[3]);
      REQUIRE(c[0] == c[1]);
      REQUIRE(c[2] == c[3]);
    }
}

TEST_CASE("joint polynomial evaluation", "[identities]") {
  auto const p = partition_count(12);
  for (unsigned n = 1; n <= 12; ++n) {
    auto const r = check_bnew1_eval(n, 3, std::vector<Rational>(n, Rational(1)), Rational(1));
    CHECK(std::get<Rational>(r.lhs) == Rational(p[n]));
    CHECK(r.pass);
  }
  auto rng = sample_stream(42, 8, 2);
  for (int i = 0; i < 10; ++i) {
    auto xs = sample_rational_point(rng, 8);
    auto z = small_rational(rng);
    auto const r = check_bnew1_eval(8, 2, xs, z, 42);
    REQUIRE(r.pass);
    REQUIRE(r.point->size() == 9);
    REQUIRE(r.seed == 42u);
  }
  CHECK_THROWS_AS(check_bnew1_eval(3, 2, {Rational(1)}, Rational(1)), std::invalid_argument);
}

TEST_CASE("joint polynomials coincide as multisets", "[identities][property]") {
  for (unsigned n = 0; n <= 14; ++n)
    for (unsigned m = 1; m <= 6; ++m) REQUIRE(joint_polynomial(n, m, false) == joint_polynomial(n, m, true));
}

TEST_CASE("transport report", "[identities]") {
  auto const r = check_bnew1_transport(12, 3);
  CHECK(r.pass);
  CHECK(lhs_int(r) == 77);
}

TEST_CASE("trivariate evaluation", "[identities]") {
  auto const p = partition_count(10);
  auto const ones = check_dnew1_eval(10, 3, 1, 1, 1);
  CHECK(std::get<Rational>(ones.lhs) == Rational(p[10]));
  auto const r = check_dnew1_eval(10, 3, Rational(2), Rational(3, 2), Rational(-1, 2));
  CHECK(r.pass);
  CHECK(std::get<Rational>(r.lhs) == Rational(-10465, 512));
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned m = 1; m <= 5; ++m) REQUIRE(check_dnew1_eval(n, m, -1, 1, 1).pass);
}

TEST_CASE("derivatives reproduce the weighted sign sums", "[identities]") {
  for (unsigned n = 1; n <= 15; ++n)
    for (unsigned m = 1; m <= 6; ++m)
      for (int sign : {1, -1}) {
        auto const dy = check_dnew_derivative(n, m, sign, DerivativeVariable::y);
        auto const dz = check_dnew_derivative(n, m, sign, DerivativeVariable::z);
        auto const a1 = check_am_general(n, m, sign, WeightVariant::multiplicity);
        auto const a2 = check_am_general(n, m, sign, WeightVariant::residual);
        REQUIRE(dy.pass);
        REQUIRE(dz.pass);
        REQUIRE(dy.lhs == a1.lhs);
        REQUIRE(dy.rhs == a1.rhs);
        REQUIRE(dz.lhs == a2.lhs);
        REQUIRE(dz.rhs == a2.rhs);
      }
}

TEST_CASE("report verdict rules", "[identities]") {
  IdentityReport r;
  detail::settle(r, std::complex<double>(1.0, 0.0), std::complex<double>(1.0 + 1e-12, 0.0));
  CHECK(r.pass);
  CHECK(r.residual > 0.0);
  detail::settle(r, std::complex<double>(1.0, 0.0), std::complex<double>(1.0 + 1e-6, 0.0));
  CHECK_FALSE(r.pass);
  detail::settle(r, BigInt(3), BigInt(4));
  CHECK_FALSE(r.pass);
  CHECK(r.residual == 0.0);
}
