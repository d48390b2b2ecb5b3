#include <doctest.h>

#include <numeric>

#include "torsionkit/golden.hpp"
#include "torsionkit/tap.hpp"

using namespace torsionkit;

namespace {

LaurentPolynomial t_pow(long e) { return LaurentPolynomial::monomial(1, e); }
const LaurentPolynomial one(CyclotomicNumber(1));

ComponentData only_component(long p, long q, long n, std::optional<long> dim = std::nullopt) {
  std::vector<ComponentData> hits;
  for (const auto& c : enumerate_components(TorusKnot(p, q), n)) {
    if (!dim || component_dimension(c) == *dim) hits.push_back(c);
  }
  REQUIRE(hits.size() == 1);
  return hits.front();
}

}  // namespace

TEST_SUITE("tap") {
  TEST_CASE("trefoil") {
    const auto sl2 = only_component(2, 3, 2);
    CHECK(tap_polynomial(sl2) == -t_pow(2) - one);
    CHECK(expansion_sign(sl2) == -1);
    const auto sl3 = only_component(2, 3, 3);
    CHECK(tap_polynomial(sl3) == t_pow(3) - one);
    CHECK(tap_polynomial(sl3).to_pretty() == "t^3 - 1");
    CHECK(expansion_sign(sl3) == 1);
  }

  TEST_CASE("dimension-4 SL3 component of K(3,4)") {
    const auto c = only_component(3, 4, 3, 4);
    CHECK(tap_polynomial(c) == -(t_pow(12) - one) * (t_pow(3) + one));
    CHECK(tap_polynomial(c) == tap_max_dim(c.knot, 3, c.k, {0, 1, 2}, {0, 1, 3}));
  }

  TEST_CASE("worked examples") {
    auto cases = golden_cases();
    CHECK(cases.size() == 17);
    for (long q : {5, 7, 8}) {
      const auto extra = golden_p3_table(q);
      CHECK_FALSE(extra.empty());
      cases.insert(cases.end(), extra.begin(), extra.end());
    }
    for (const auto& g : cases) {
      INFO(g.name, ": ", g.display);
      const auto r = check_golden(g);
      CHECK_MESSAGE(r.passed, r.detail);
    }
  }

  TEST_CASE("a deliberately wrong row is rejected") {
    auto g = golden_cases().front();
    g.sign = -g.sign;
    CHECK_FALSE(check_golden(g).passed);
  }

  TEST_CASE("closed form and polynomial agree") {
    for (long p = 2; p <= 5; ++p) {
      for (long q = p + 1; q <= 7; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (long n = 2; n <= 4; ++n) {
          for (const auto& c : enumerate_components(TorusKnot(p, q), n)) {
            INFO(c.to_string());
            const auto poly = tap_polynomial(c);
            CHECK(expansion_consistent(c, poly));
            CHECK(poly.has_algebraic_integer_coefficients());
            CHECK(poly.conductor() <= c.conductor());
            CHECK(c.conductor() % poly.conductor() == 0);
            const Complex t0(Real(1.3), Real(0.4));
            const Complex closed = tap_closed_form(c).evaluate(t0) * Real(expansion_sign(c));
            const Complex expanded = poly.evaluate(t0);
            CHECK(to_double(abs(closed - expanded) / abs(expanded)) < 1e-20);
          }
        }
      }
    }
  }

  TEST_CASE("maximal-dimension formula matches the product expansion") {
    for (const auto& c : enumerate_components(TorusKnot(3, 5), 3)) {
      if (c.max_a_mult() != 1 || c.max_b_mult() != 1) continue;
      std::vector<long> a_set;
      std::vector<long> b_set;
      for (const auto& e : c.a) a_set.push_back(e.exp);
      for (const auto& e : c.b) b_set.push_back(e.exp);
      CHECK(tap_max_dim(c.knot, c.n, c.k, a_set, b_set) == tap_polynomial(c));
    }
    CHECK_THROWS_AS(tap_max_dim(TorusKnot(2, 3), 3, 0, {0, 1}, {0, 1, 2}), ConstraintViolation);
  }

  TEST_CASE("polynomial is wrong when a factor is dropped") {
    const auto c = only_component(3, 4, 3, 4);
    auto factors = tap_factors(c);
    REQUIRE_FALSE(factors.empty());
    factors.pop_back();
    const auto truncated = expand_product(factors, c.conductor());
    CHECK_FALSE(expansion_consistent(c, truncated));
  }

  TEST_CASE("factor canonicalization and printing") {
    const auto merged = canonical_factors({{RootExponent(3, 1), 6, 1}, {RootExponent(1, 0), 3, 1},
                                           {RootExponent(6, 2), 6, 1}});
    REQUIRE(merged.size() == 2);
    CHECK(merged[0] == RootFactor{RootExponent(1, 0), 3, 1});
    CHECK(merged[1] == RootFactor{RootExponent(3, 1), 6, 2});
    CHECK(factors_string(merged) == "(t^3 - 1) (e(1/3)*t^6 - 1)^2");
    CHECK(factors_string({}) == "1");
    const auto form = tap_closed_form(only_component(2, 3, 2));
    CHECK(form.to_string() ==
          "(e(1/2)*t^6 - 1)^2 / ((e(1/6)*t^2 - 1) (e(5/6)*t^2 - 1) (e(1/4)*t^3 - 1) (e(3/4)*t^3 - 1))");
  }
}
