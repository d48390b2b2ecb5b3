#include <doctest.h>

#include <random>

#include "torsionkit/fox.hpp"
#include "torsionkit/numeric.hpp"
#include "torsionkit/oracle.hpp"

using namespace torsionkit;

namespace {

ComponentData trefoil_sl3() { return enumerate_components(TorusKnot(2, 3), 3).front(); }

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix d = a;
  d -= b;
  return to_double(norm_inf(d));
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("fox derivatives") {
    CHECK(to_string(fox_derivative(torus_relator(3, 2), Generator::x)) == "1 + x + x^2");
    CHECK(to_string(fox_derivative(torus_relator(2, 2), Generator::y)) == "-x^2 y^-1 - x^2 y^-2");
    CHECK(fox_derivative(FoxWord::parse("y^4"), Generator::x).empty());
    CHECK(FoxWord::parse("x y y^-1 x^-1").letters.empty());
    CHECK(FoxWord::parse("x^3 y^-2").to_string() == "x^3 y^-2");
    CHECK(FoxWord::parse("x^2 y").inverse() == FoxWord::parse("y^-1 x^-2"));
  }

  TEST_CASE("prefix scan matches term-by-term evaluation") {
    std::mt19937_64 rng(11);
    const GeneratorImages images(random_gaussian_matrix(3, rng), random_gaussian_matrix(3, rng));
    for (const char* w : {"x^3 y^-2", "x y x^-1 y^2 x^-3", "y^-4 x^2 y"}) {
      const auto word = FoxWord::parse(w);
      for (const auto g : {Generator::x, Generator::y}) {
        const auto direct = evaluate(fox_derivative(word, g), images);
        const auto scanned = evaluate_fox_derivative(word, g, images);
        CHECK(distance(direct, scanned) < 1e-20 * (1 + to_double(norm_inf(direct))));
      }
    }
  }

  TEST_CASE("fundamental formula of Fox calculus") {
    // w - 1 = dw/dx (x - 1) + dw/dy (y - 1)
    std::mt19937_64 rng(5);
    const auto x = random_gaussian_matrix(2, rng);
    const auto y = random_gaussian_matrix(2, rng);
    const GeneratorImages images(x, y);
    const auto word = FoxWord::parse("x^2 y^-1 x^-1 y^3");
    ComplexMatrix lhs = evaluate(word, images);
    lhs -= ComplexMatrix::identity(2);
    ComplexMatrix xm = x;
    xm -= ComplexMatrix::identity(2);
    ComplexMatrix ym = y;
    ym -= ComplexMatrix::identity(2);
    ComplexMatrix rhs = evaluate_fox_derivative(word, Generator::x, images) * xm;
    rhs += evaluate_fox_derivative(word, Generator::y, images) * ym;
    CHECK(distance(lhs, rhs) < 1e-20 * (1 + to_double(norm_inf(lhs))));
  }

  TEST_CASE("dense linear algebra") {
    ComplexMatrix m(2);
    m(0, 0) = Complex(2);
    m(0, 1) = Complex(1);
    m(1, 0) = Complex(1);
    m(1, 1) = Complex(3);
    CHECK(to_double(abs(determinant(m) - Complex(5))) < 1e-25);
    CHECK(distance(m * inverse(m), ComplexMatrix::identity(2)) < 1e-25);
    ComplexMatrix singular(2);
    singular(0, 0) = Complex(1);
    singular(0, 1) = Complex(2);
    singular(1, 0) = Complex(2);
    singular(1, 1) = Complex(4);
    CHECK(to_double(abs(determinant(singular))) < 1e-25);
    CHECK_THROWS_AS(inverse(singular), SingularMatrix);
  }

  TEST_CASE("numeric representation satisfies the relation") {
    for (long n = 2; n <= 4; ++n) {
      for (const auto& c : enumerate_components(TorusKnot(3, 4), n)) {
        const auto rep = NumericRep::from_component(c, 99);
        CHECK(to_double(rep.invariant_error(c.knot)) < 1e-20);
        const auto again = NumericRep::from_component(c, 99);
        CHECK(distance(rep.Y, again.Y) == 0.0);
      }
    }
  }

  TEST_CASE("trefoil at t = 2") {
    const auto c = trefoil_sl3();
    const auto rep = NumericRep::from_component(c, 20240611);
    const Complex v = wada_value(rep, c.knot, FoxColumn::y, Complex(2));
    CHECK(to_double(abs(v - Complex(7))) < 1e-20);
    CHECK(to_double(abs(tap_closed_form(c).evaluate(Complex(2)) - Complex(7))) < 1e-25);
    CHECK(columns_agree(rep, c.knot, Complex(Real(1.7)), 1e-12));
    CHECK(columns_agree(rep, c.knot, polar_unit(Real(0.9)), 1e-12));
  }

  TEST_CASE("trial seeds are deterministic and distinct") {
    CHECK(trial_seed(1, 2, 3) == trial_seed(1, 2, 3));
    CHECK(trial_seed(1, 2, 3) != trial_seed(1, 2, 4));
    CHECK(trial_seed(1, 2, 3) != trial_seed(1, 3, 3));
    CHECK(trial_seed(1, 2, 3) != trial_seed(2, 2, 3));
  }

  TEST_CASE("closed form agrees with the determinant ratio") {
    for (long n = 2; n <= 3; ++n) {
      const auto grid = oracle_knot(TorusKnot(2, 5), n, 5, 1234, 1e-9);
      CHECK(grid.passed);
      CHECK(grid.max_relative_error < 1e-9);
      for (const auto& r : grid.components) CHECK_MESSAGE(r.passed, r.component.to_string());
    }
    const auto a = compare_component(trefoil_sl3(), 4, 77, 1e-9);
    const auto b = compare_component(trefoil_sl3(), 4, 77, 1e-9);
    CHECK(a.passed);
    CHECK(a.max_relative_error == b.max_relative_error);
  }

  TEST_CASE("a wrong closed form is detected") {
    // the K(2,5) forms belong to different eigenvalue data
    const auto comps = enumerate_components(TorusKnot(2, 5), 2);
    REQUIRE(comps.size() == 2);
    const auto report = compare_rep(comps[0], tap_closed_form(comps[1]), 5, 3, 1e-9);
    CHECK_FALSE(report.passed);
    CHECK_FALSE(report.failures.empty());
    CHECK(report.max_relative_error > 1e-3);
  }
}
