#include <doctest.h>

#include <numeric>

#include "torsionkit/tap.hpp"
#include "torsionkit/torsion.hpp"

using namespace torsionkit;

namespace {

CyclotomicNumber z(long n, long e) { return CyclotomicNumber::root_of_unity(n, e); }
// sqrt 5 = 1 + 2 (z + z^4) at z = e(1/5)
CyclotomicNumber sqrt5() { return 1 + 2 * (z(5, 1) + z(5, 4)); }

}  // namespace

TEST_SUITE("torsion") {
  TEST_CASE("four sin squared") {
    CHECK(four_sin_squared(6, 1) == CyclotomicNumber(1));
    CHECK(four_sin_squared(4, 1) == CyclotomicNumber(2));
    CHECK(four_sin_squared(3, 1) == CyclotomicNumber(3));
    CHECK(four_sin_squared(2, 1) == CyclotomicNumber(4));
    CHECK(four_sin_squared(5, 0).is_zero());
    CHECK(four_sin_squared(5, 1) * four_sin_squared(5, 2) == CyclotomicNumber(5));
  }

  TEST_CASE("SL2 torsion closed form") {
    CHECK(sl2_torsion(TorusKnot(2, 3), 1, 1).value == CyclotomicNumber(2));
    CHECK(sl2_torsion(TorusKnot(2, 5), 1, 1).value == 3 + sqrt5());
    CHECK(sl2_torsion(TorusKnot(2, 5), 1, 3).value == 3 - sqrt5());
    const auto even = sl2_torsion(TorusKnot(3, 4), 2, 2);
    CHECK(even.value.is_zero());
    CHECK_FALSE(even.acyclic);
    CHECK(sl2_torsion(TorusKnot(2, 3), 1, 1).sign_defined);
    CHECK_THROWS_AS(sl2_torsion(TorusKnot(2, 3), 1, 2), ConstraintViolation);
  }

  TEST_CASE("adjoint torsion") {
    const auto tv = adjoint_torsion(TorusKnot(2, 3), 1, 1);
    CHECK(tv.value == CyclotomicNumber(Rational(1, 2)));
    CHECK_FALSE(tv.sign_defined);
    CHECK(tv.acyclic);
    CHECK_FALSE(certify_torsion_integrality(tv));
    CHECK(adjoint_torsion(TorusKnot(3, 4), 1, 1).value == CyclotomicNumber(2));
  }

  TEST_CASE("torsion from the polynomial") {
    const auto trefoil = enumerate_components(TorusKnot(2, 3), 2).front();
    const auto tv = torsion_from_component(trefoil);
    CHECK(tv.value == CyclotomicNumber(2));
    CHECK(tv.acyclic);
    CHECK(certify_torsion_integrality(tv));

    const auto sl3 = enumerate_components(TorusKnot(2, 3), 3).front();
    const auto zero = torsion_from_component(sl3);
    CHECK(zero.value.is_zero());
    CHECK_FALSE(zero.acyclic);
    CHECK_THROWS_AS(torsion_by_division(sl3), DivisionByZero);
  }

  TEST_CASE("SL2 torsion from components matches the closed form") {
    for (long p = 2; p <= 7; ++p) {
      for (long q = p + 1; q <= 9; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const TorusKnot knot(p, q);
        for (const auto& c : enumerate_components(knot, 2)) {
          const auto [a, b] = sl2_index(c);
          INFO(c.to_string());
          CHECK(torsion_from_component(c).value == sl2_torsion(knot, a, b).value);
        }
      }
    }
  }

  TEST_CASE("division and polynomial routes agree on acyclic components") {
    for (long n = 2; n <= 4; ++n) {
      for (const auto& c : enumerate_components(TorusKnot(3, 5), n)) {
        const auto tv = torsion_from_component(c);
        INFO(c.to_string());
        CHECK(tv.acyclic == !tv.value.is_zero());
        CHECK(certify_torsion_integrality(tv));
        if (!c.omega().is_one()) {
          CHECK(tv.acyclic);
          CHECK(torsion_by_division(c) == tv.value);
        } else {
          // (omega - 1)^n vanishes; the quotient is 0/0 exactly when residue 0 occurs on a side
          const bool zero_residue = c.a.front().exp == 0 || c.b.front().exp == 0;
          if (zero_residue) {
            CHECK_THROWS_AS(torsion_by_division(c), DivisionByZero);
          } else {
            CHECK(torsion_by_division(c).is_zero());
            CHECK_FALSE(tv.acyclic);
          }
        }
      }
    }
  }
}
