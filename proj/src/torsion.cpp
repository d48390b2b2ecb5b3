#include "torsionkit/torsion.hpp"

#include "torsionkit/tap.hpp"

namespace torsionkit {

TorsionValue torsion_from_component(const ComponentData& c) {
  const LaurentPolynomial delta = tap_polynomial(c);
  CyclotomicNumber value = delta.value_at_one();
  if (expansion_sign(c) < 0) value = -value;
  return {value, !value.is_zero(), true};
}

CyclotomicNumber torsion_by_division(const ComponentData& c) {
  validate(c);
  const long big = c.conductor();
  CyclotomicNumber result = (CyclotomicNumber::root_of_unity(c.omega()) - 1).pow(c.n).lift(big);
  if (result.is_zero()) {
    // omega = 1: zero unless a denominator factor vanishes as well.
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      if (c.alpha(i).is_one()) throw DivisionByZero("closed-form quotient is 0/0 at t = 1");
    }
    for (std::size_t j = 0; j < c.b.size(); ++j) {
      if (c.beta(j).is_one()) throw DivisionByZero("closed-form quotient is 0/0 at t = 1");
    }
    return result;
  }
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    result *= inverse_of_root_minus_one(c.alpha(i)).pow(c.a[i].mult);
  }
  for (std::size_t j = 0; j < c.b.size(); ++j) {
    result *= inverse_of_root_minus_one(c.beta(j)).pow(c.b[j].mult);
  }
  return result;
}

CyclotomicNumber four_sin_squared(long m, long a) {
  return 2 - CyclotomicNumber::root_of_unity(m, a) - CyclotomicNumber::root_of_unity(m, -a);
}

TorsionValue sl2_torsion(const TorusKnot& knot, long a, long b) {
  check_sl2_index(knot, a, b);
  if (a % 2 == 0) return {CyclotomicNumber(), false, true};
  const CyclotomicNumber value =
      4 * four_sin_squared(2 * knot.p, a).inverse() * four_sin_squared(2 * knot.q, b).inverse();
  return {value, true, true};
}

TorsionValue adjoint_torsion(const TorusKnot& knot, long a, long b) {
  check_sl2_index(knot, a, b);
  const CyclotomicNumber value =
      knot.p * knot.q * four_sin_squared(knot.p, a).inverse() * four_sin_squared(knot.q, b).inverse();
  return {value, true, false};
}

bool certify_torsion_integrality(const TorsionValue& tv) { return tv.value.is_algebraic_integer(); }

}  // namespace torsionkit
