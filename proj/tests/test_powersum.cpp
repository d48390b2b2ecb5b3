#include <doctest.h>

#include <numeric>

#include "torsionkit/powersum.hpp"

using namespace torsionkit;

namespace {

Rational frac(long a, long b) { return Rational(a) / b; }

void check_values(PowerSumKind kind, long p, long q, long m, const Rational& want) {
  const auto r = power_sum(kind, p, q, m);
  INFO(to_string(kind), " K(", p, ",", q, ") m=", m);
  CHECK(r.brute_force == want);
  CHECK(r.closed_form == want);
  CHECK(r.passes);
  for (const auto& [claim, ok] : r.side_checks) CHECK_MESSAGE(ok, claim);
}

}  // namespace

TEST_SUITE("powersum") {
  TEST_CASE("kind names") {
    CHECK(to_string(PowerSumKind::adjoint_neg) == "adj-neg");
    CHECK(parse_power_sum_kind("sl2-pos") == PowerSumKind::sl2_pos);
    CHECK(parse_power_sum_kind("adj_pos") == PowerSumKind::adjoint_pos);
    CHECK_THROWS_AS(parse_power_sum_kind("adj"), std::invalid_argument);
  }

  TEST_CASE("sine power identities") {
    for (long p = 2; p <= 10; ++p) {
      for (long m = 1; m <= 8; ++m) {
        CHECK(odd_sin_power_sum(p, m).equal());
        CHECK(full_sin_power_sum(p, m).equal());
      }
    }
    CHECK(odd_sin_power_sum(3, 3).lhs == 66);
    CHECK(full_sin_power_sum(4, 2).lhs == 24);
    CHECK(binomial_alternating_sum(3, 3, 1) == 54);
    CHECK(binomial_alternating_sum(5, 2, 1) == 30);
  }

  TEST_CASE("Verlinde ranks") {
    CHECK(verlinde_rank(5, 1) == 5);
    CHECK(verlinde_rank(6, 2) == 8);
    CHECK(verlinde_rank(7, 3) == 833);
    for (long q = 3; q <= 9; q += 2) {
      for (long m = 0; m <= 4; ++m) {
        Rational scale = 1;
        for (long i = 0; i <= m; ++i) scale *= 2;
        CHECK(verlinde_rank(2 * q, m) == scale * verlinde_rank(q, m));
      }
    }
  }

  TEST_CASE("SL2 sums over negative powers") {
    check_values(PowerSumKind::sl2_neg, 2, 3, 1, frac(1, 2));
    check_values(PowerSumKind::sl2_neg, 2, 5, 2, frac(7, 4));
    check_values(PowerSumKind::sl2_neg, 3, 4, 3, frac(5, 8));
    check_values(PowerSumKind::sl2_neg, 3, 5, 2, frac(7, 16));
    CHECK_THROWS_AS(sl2_neg_power_sum(2, 3, -1), std::invalid_argument);
  }

  TEST_CASE("SL2 sums over positive powers") {
    check_values(PowerSumKind::sl2_pos, 2, 5, 3, 144);
    check_values(PowerSumKind::sl2_pos, 3, 4, 2, 48);
    check_values(PowerSumKind::sl2_pos, 3, 5, 1, 12);
  }

  TEST_CASE("adjoint sums") {
    check_values(PowerSumKind::adjoint_neg, 2, 5, 2, frac(12, 5));
    check_values(PowerSumKind::adjoint_neg, 3, 4, 3, frac(5, 4));
    check_values(PowerSumKind::adjoint_pos, 3, 4, 3, 17);
    check_values(PowerSumKind::adjoint_pos, 3, 5, 2, 30);
    for (long p = 2; p <= 6; ++p) {
      for (long q = p + 1; q <= 9; ++q) {
        if (std::gcd(p, q) != 1) continue;
        CHECK(adjoint_neg_power_sum(p, q, 1).brute_force == 2);
      }
    }
  }

  TEST_CASE("adjoint sums along other curves") {
    const auto meridian = adjoint_neg_power_sum(2, 3, 1, std::make_pair(1L, 0L));
    CHECK(meridian.passes);
    CHECK(meridian.brute_force == 2);
    const auto longitude = adjoint_neg_power_sum(2, 3, 2, std::make_pair(0L, 1L));
    CHECK(longitude.passes);
    CHECK(longitude.brute_force == frac(2, 3));
    CHECK_THROWS_AS(adjoint_neg_power_sum(2, 3, 1, std::make_pair(6L, 1L)), std::invalid_argument);
  }

  TEST_CASE("q = 2 has a single factor") {
    for (long p = 3; p <= 9; p += 2) {
      for (long m = 0; m <= 4; ++m) {
        CHECK(sl2_neg_power_sum(2, p, m).brute_force == sl2_neg_factor(p, m) * sl2_neg_factor(2, m));
      }
    }
  }
}
