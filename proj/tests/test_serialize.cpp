#include <doctest.h>

#include "torsionkit/serialize.hpp"

using namespace torsionkit;

namespace {

CyclotomicNumber z(long n, long e) { return CyclotomicNumber::root_of_unity(n, e); }

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("cyclotomic numbers") {
    const auto x = CyclotomicNumber(Rational(1, 2), 12) - z(12, 2);
    CHECK(to_json(x) == Json("N=12: 1/2 - 1*z^2"));
    CHECK(cyclotomic_from_json(to_json(x)) == x);
    CHECK(rational_json(Rational(-3) / 4) == "-3/4");
    CHECK(rational_json(Rational(5)) == "5");
  }

  TEST_CASE("Laurent polynomials") {
    const auto f = LaurentPolynomial::monomial(z(3, 1), 2) - LaurentPolynomial::monomial(1, -1);
    const Json j = to_json(f);
    CHECK(j.at("var") == "t");
    CHECK(j.at("conductor") == 3);
    REQUIRE(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("exp") == -1);
    CHECK(j.at("terms")[0].at("coeff") == Json::array({"-1", "0"}));
    CHECK(j.at("terms")[1].at("coeff") == Json::array({"0", "1"}));
    CHECK(laurent_from_json(j) == f);
    CHECK(to_json(LaurentPolynomial()).at("terms").empty());

    Json bad = j;
    bad["terms"][0]["coeff"] = Json::array({"1"});
    CHECK_THROWS_AS(laurent_from_json(bad), std::invalid_argument);
    bad = j;
    bad["var"] = "s";
    CHECK_THROWS_AS(laurent_from_json(bad), std::invalid_argument);
  }

  TEST_CASE("components") {
    for (const auto& c : enumerate_components(TorusKnot(3, 4), 3)) {
      const Json j = to_json(c);
      CHECK(j.at("dim") == component_dimension(c));
      CHECK(component_from_json(j) == c);
    }
    Json j = to_json(enumerate_components(TorusKnot(2, 3), 2).front());
    CHECK(j.dump() == R"({"p":2,"q":3,"n":2,"k":1,"a":[{"exp":0,"mult":1},{"exp":1,"mult":1}],)"
                      R"("b":[{"exp":0,"mult":1},{"exp":2,"mult":1}],"dim":1})");
    j["dim"] = 3;
    CHECK_THROWS_AS(component_from_json(j), ConstraintViolation);
    j["dim"] = 1;
    j["k"] = 0;
    CHECK_THROWS_AS(component_from_json(j), ConstraintViolation);
  }

  TEST_CASE("torsion values") {
    const Json j = to_json(sl2_torsion(TorusKnot(2, 3), 1, 1));
    CHECK(j.at("value") == "N=12: 2");
    CHECK(j.at("float")[0].get<double>() == doctest::Approx(2.0));
    CHECK(j.at("acyclic") == true);
    CHECK(j.at("sign_defined") == true);
    CHECK(j.at("integral") == true);
    CHECK(to_json(adjoint_torsion(TorusKnot(2, 3), 1, 1)).at("integral") == false);
  }

  TEST_CASE("reports") {
    const Json ps = to_json(adjoint_neg_power_sum(2, 3, 2, std::make_pair(0L, 1L)));
    CHECK(ps.at("kind") == "adj-neg");
    CHECK(ps.at("curve") == Json::array({0, 1}));
    CHECK(ps.at("brute_force") == "2/3");
    CHECK(ps.at("passes") == true);

    const auto c = enumerate_components(TorusKnot(2, 3), 2).front();
    const Json cmp = to_json(compare_component(c, 2, 1, 1e-9));
    CHECK(cmp.at("trials") == 2);
    CHECK(cmp.at("passed") == true);

    const auto form = to_json(tap_closed_form(c));
    CHECK(form.at("numerator").size() == 1);
    CHECK(form.at("numerator")[0].at("root") == Json{{"order", 12}, {"exp", 6}});
  }

  TEST_CASE("Seifert eigenvalue files") {
    const Json j = Json::parse(R"({"fibers":[[{"order":4,"exp":1},{"order":4,"exp":3}]]})");
    const auto rep = seifert_rep_from_json(j, 2, 1);
    CHECK(rep.eigen_exps.size() == 1);
    CHECK(rep.eigen_exps[0][1] == RootExponent(4, 3));
    const auto index = SeifertIndex::parse("0,1;(2,1)");
    const auto cert = to_json(seifert_integrality_certificate(index, rep));
    CHECK(cert.at("value") == "N=4: 2");
    CHECK(cert.at("integral") == true);
    CHECK_THROWS_AS(seifert_rep_from_json(Json::object(), 2, 1), Json::exception);
  }
}
