#include <doctest.h>

#include <numeric>

#include "torsionkit/seifert.hpp"

using namespace torsionkit;

namespace {

SeifertRepData hand_rep() { return {2, 1, {{RootExponent(4, 1), RootExponent(4, 3)}}}; }

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("index parsing") {
    const auto index = SeifertIndex::parse("-1,2;(2,1),(3,-1)");
    CHECK(index.euler_v == -1);
    CHECK(index.genus == 2);
    REQUIRE(index.fibers.size() == 2);
    CHECK(index.fibers[1].alpha == 3);
    CHECK(index.fibers[1].beta == -1);
    CHECK(SeifertIndex::parse(index.to_string()).to_string() == index.to_string());
    CHECK(SeifertIndex::parse("0,1").fibers.empty());
    CHECK_THROWS_AS(SeifertIndex::parse("0,0;(2,1)").validate(), ConstraintViolation);
    CHECK_THROWS_AS(SeifertIndex::parse("0,1;(1,1)").validate(), ConstraintViolation);
    CHECK_THROWS_AS(SeifertIndex::parse("0,1;(4,2)").validate(), ConstraintViolation);
  }

  TEST_CASE("mu and nu") {
    CHECK(mu_nu(2, 1) == std::pair<long, long>{1, 0});
    CHECK(mu_nu(5, 2) == std::pair<long, long>{3, 1});
    for (long alpha = 2; alpha <= 9; ++alpha) {
      for (long beta = -12; beta <= 12; ++beta) {
        if (std::gcd(alpha, beta) != 1) continue;
        const auto [mu, nu] = mu_nu(alpha, beta);
        CHECK(alpha * nu - beta * mu == -1);
        CHECK(mu > 0);
        CHECK(mu < alpha);
      }
    }
  }

  TEST_CASE("hand case") {
    const auto index = SeifertIndex::parse("0,1;(2,1)");
    const auto tv = seifert_torsion(index, hand_rep());
    CHECK(tv.value == CyclotomicNumber(2));
    CHECK(tv.acyclic);
    const auto cert = seifert_integrality_certificate(index, hand_rep());
    CHECK(cert.integral);
    CHECK(cert.value == CyclotomicNumber(2));
    CHECK(cert.prefactor.is_one());
    CHECK(cert.witnesses.size() == 2);
    CHECK_THROWS_AS(seifert_integrality_certificate(index, hand_rep(), CyclotomicNumber(3)), CertificateMismatch);
  }

  TEST_CASE("no exceptional fibers") {
    // (omega - 1)^{n(2g - 2)} with omega = -1, n = 2, g = 2
    const SeifertRepData rep{2, 1, {}};
    CHECK(seifert_torsion(SeifertIndex::parse("3,2"), rep).value == CyclotomicNumber(16));
    CHECK(seifert_torsion(SeifertIndex::parse("0,1"), rep).value == CyclotomicNumber(1));
  }

  TEST_CASE("eigenvalue constraints") {
    const auto index = SeifertIndex::parse("0,1;(2,1)");
    SeifertRepData bad = hand_rep();
    bad.eigen_exps[0][1] = RootExponent(4, 0);
    CHECK_THROWS_AS(bad.validate(index), ConstraintViolation);
    SeifertRepData short_row = hand_rep();
    short_row.eigen_exps[0].pop_back();
    CHECK_THROWS_AS(short_row.validate(index), ConstraintViolation);
  }

  TEST_CASE("degenerate data is not acyclic") {
    const auto index = SeifertIndex::parse("0,1;(2,1)");
    const SeifertRepData rep{2, 0, {{RootExponent(2, 0), RootExponent(2, 1)}}};
    const auto tv = seifert_torsion(index, rep);
    CHECK(tv.value.is_zero());
    CHECK_FALSE(tv.acyclic);
    CHECK_THROWS_AS(seifert_integrality_certificate(index, rep), ConstraintViolation);
  }

  TEST_CASE("values on several fibers are algebraic integers") {
    // omega = e(1/3), fibers (2,1) and (3,1): e^2 = omega^-1 and e^3 = omega^-1
    const auto index = SeifertIndex::parse("1,1;(2,1),(3,1)");
    SeifertRepData rep{3, 1, {}};
    rep.eigen_exps.push_back({RootExponent(6, -1), RootExponent(6, 2), RootExponent(6, 5)});
    rep.eigen_exps.push_back({RootExponent(9, -1), RootExponent(9, 2), RootExponent(9, 5)});
    REQUIRE_NOTHROW(rep.validate(index));
    const auto tv = seifert_torsion(index, rep);
    CHECK(tv.acyclic);
    CHECK(tv.value.is_algebraic_integer());
    const auto cert = seifert_integrality_certificate(index, rep, tv.value);
    CHECK(cert.integral);
    for (const auto& w : cert.witnesses) CHECK(w.is_algebraic_integer());
    CHECK(fiber_factors(index, rep).size() == 2);
  }
}
