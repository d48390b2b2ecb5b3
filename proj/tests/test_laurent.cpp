#include <doctest.h>

#include "torsionkit/laurent.hpp"

using namespace torsionkit;

namespace {

CyclotomicNumber z(long n, long e) { return CyclotomicNumber::root_of_unity(n, e); }
LaurentPolynomial t_pow(long e) { return LaurentPolynomial::monomial(1, e); }
const LaurentPolynomial one(CyclotomicNumber(1));

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("addition and products") {
    CHECK((t_pow(1) - one) * (t_pow(1) + one) == t_pow(2) - one);
    CHECK(((t_pow(3) - one) + (one - t_pow(3))).is_zero());
    const auto f = LaurentPolynomial::binomial(z(3, 1), 1) * LaurentPolynomial::binomial(z(3, 2), 1) *
                   LaurentPolynomial::binomial(1, 1);
    CHECK(f == t_pow(3) - one);
    CHECK(f.to_pretty() == "t^3 - 1");
  }

  TEST_CASE("linear factor product matches the general product") {
    LaurentPolynomial f = t_pow(2) + LaurentPolynomial(z(5, 1));
    const LaurentPolynomial g = f * LaurentPolynomial::binomial(z(7, 3), 4);
    f.mul_linear_factor(RootExponent(7, 3), 4);
    CHECK(f == g);
  }

  TEST_CASE("evaluation") {
    const auto f = t_pow(3) - one;
    CHECK(f.evaluate(CyclotomicNumber(1)).is_zero());
    CHECK(f.value_at_one().is_zero());
    CHECK(f.evaluate(CyclotomicNumber(-1)) == CyclotomicNumber(-2));
    CHECK(LaurentPolynomial::binomial(z(4, 1), 2).evaluate(z(8, 1)) == CyclotomicNumber(-2));
    CHECK_THROWS_AS(t_pow(-1).evaluate(CyclotomicNumber(0)), DivisionByZero);
    CHECK(t_pow(-2).evaluate(CyclotomicNumber(2)) == CyclotomicNumber(Rational(1, 4)));
    const Complex v = f.evaluate(Complex(2));
    CHECK(to_double(v.real()) == doctest::Approx(7.0));
  }

  TEST_CASE("equality up to units") {
    const auto f = t_pow(3) - one;
    CHECK(equal_up_to_unit(f, one - t_pow(3)));
    CHECK(equal_up_to_unit(f, t_pow(5) - t_pow(2)));
    CHECK_FALSE(equal_up_to_unit(f, t_pow(3) + one));
    CHECK(f.shifted(-3) == one - t_pow(-3));
  }

  TEST_CASE("structure queries") {
    const auto f = LaurentPolynomial::from_terms({{-2, z(3, 1)}, {4, CyclotomicNumber(Rational(1, 2))}, {1, 0}});
    CHECK(f.min_exponent() == -2);
    CHECK(f.max_exponent() == 4);
    CHECK(f.span() == 6);
    CHECK(f.terms().size() == 2);
    CHECK(f.conductor() == 3);
    CHECK_FALSE(f.has_algebraic_integer_coefficients());
    CHECK(f.coefficient(1).is_zero());
    CHECK(f.pow(0) == one);
    CHECK(f.pow(2) == f * f);
  }
}
