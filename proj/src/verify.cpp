#include "torsionkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "torsionkit/charvar.hpp"
#include "torsionkit/golden.hpp"
#include "torsionkit/oracle.hpp"
#include "torsionkit/powersum.hpp"
#include "torsionkit/seifert.hpp"
#include "torsionkit/tap.hpp"
#include "torsionkit/torsion.hpp"

namespace torsionkit {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

namespace {

std::vector<std::pair<long, long>> coprime_pairs(long max) {
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p <= max; ++p) {
    for (long q = p + 1; q <= max; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

std::string knot_name(long p, long q) { return "K(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// Runs body, filling name/duration; exceptions turn into a failed check.
SuiteReport timed(const std::string& suite, const std::function<void(std::vector<CheckResult>&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite;
  try {
    body(report.checks);
  } catch (const std::exception& e) {
    report.checks.push_back({suite + " aborted", false, e.what()});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckResult equal_check(std::string name, const Rational& got, const Rational& want) {
  CheckResult c{std::move(name), got == want, ""};
  if (!c.passed) c.detail = "got " + rational_to_string(got) + ", expected " + rational_to_string(want);
  return c;
}

Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"examples", "counting", "integrality", "oracle",
                                              "lemmas",   "powersum", "seifert",     "sl2"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "examples") return verify_examples();
  if (name == "counting") return verify_counting();
  if (name == "integrality") return verify_integrality();
  if (name == "oracle") return verify_oracle(options.seed, options.oracle_trials, options.oracle_tolerance);
  if (name == "lemmas") return verify_lemmas();
  if (name == "powersum") return verify_powersum();
  if (name == "seifert") return verify_seifert(options.seed, options.seifert_samples);
  if (name == "sl2") return verify_sl2();
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport verify_examples() {
  return timed("examples", [](std::vector<CheckResult>& out) {
    auto cases = golden_cases();
    for (long q : {5, 7, 8}) {
      auto extra = golden_p3_table(q);
      cases.insert(cases.end(), extra.begin(), extra.end());
    }
    for (const auto& g : cases) {
      const GoldenResult r = check_golden(g);
      out.push_back({r.name + ": " + r.display, r.passed, r.detail});
    }
  });
}

SuiteReport verify_counting() {
  return timed("counting", [](std::vector<CheckResult>& out) {
    for (const auto& [p, q] : coprime_pairs(12)) {
      const TorusKnot knot(p, q);
      const long got = static_cast<long>(enumerate_components(knot, 2).size());
      out.push_back(equal_check(knot_name(p, q) + " SL2 components", got, ratio((p - 1) * (q - 1), 2)));
    }
    for (const auto& [p, q] : coprime_pairs(9)) {
      const TorusKnot knot(p, q);
      const auto comps = enumerate_components(knot, 3);
      long dim4 = 0;
      long dim2 = 0;
      for (const auto& c : comps) {
        const long d = component_dimension(c);
        if (d == 4) ++dim4;
        if (d == 2) ++dim2;
      }
      Rational want4 = binom(p - 1, 2) * binom(q - 1, 2) / 3;
      want4.canonicalize();
      const Rational want2 = ratio((p - 1) * (q - 1) * (p + q - 4), 2);
      const std::string name = knot_name(p, q) + " SL3";
      out.push_back(equal_check(name + " dimension-4 components", dim4, want4));
      out.push_back(equal_check(name + " dimension-2 components", dim2, want2));
      out.push_back(equal_check(name + " components total", static_cast<long>(comps.size()), want4 + want2));
      if (p == 3) {
        long case1 = 0;
        long case2 = 0;
        for (const auto& c : comps) {
          if (c.a.size() == 2 && c.b.size() == 3) ++case1;
          if (c.a.size() == 3 && c.b.size() == 2) ++case2;
        }
        out.push_back(equal_check(name + " p=3 dimension 4 = (q-1)(q-2)/6", dim4, ratio((q - 1) * (q - 2), 6)));
        out.push_back(equal_check(name + " p=3 dimension 2 = (q-1)^2", dim2, (q - 1) * (q - 1)));
        out.push_back(equal_check(name + " p=3 case 1 = (q-1)(q-2)", case1, (q - 1) * (q - 2)));
        out.push_back(equal_check(name + " p=3 case 2 = q-1", case2, q - 1));
      }
    }
  });
}

SuiteReport verify_integrality() {
  return timed("integrality", [](std::vector<CheckResult>& out) {
    for (long n = 2; n <= 4; ++n) {
      for (const auto& [p, q] : coprime_pairs(7)) {
        const auto comps = enumerate_components(TorusKnot(p, q), n);
        long bad_poly = 0;
        long bad_torsion = 0;
        long inconsistent = 0;
        std::string first;
        for (const auto& c : comps) {
          const LaurentPolynomial f = tap_polynomial(c);
          const bool poly_ok = f.has_algebraic_integer_coefficients();
          const bool tors_ok = torsion_from_component(c).value.is_algebraic_integer();
          const bool consistent = expansion_consistent(c, f);
          bad_poly += !poly_ok;
          bad_torsion += !tors_ok;
          inconsistent += !consistent;
          if ((!poly_ok || !tors_ok || !consistent) && first.empty()) first = c.to_string();
        }
        std::ostringstream detail;
        detail << comps.size() << " components";
        if (!first.empty()) {
          detail << "; non-integral polynomials " << bad_poly << ", torsions " << bad_torsion
                 << ", expansion mismatches " << inconsistent << "; first " << first;
        }
        out.push_back({knot_name(p, q) + " n=" + std::to_string(n), first.empty(), detail.str()});
      }
    }
  });
}

SuiteReport verify_oracle(std::uint64_t seed, long trials, double tol) {
  return timed("oracle", [=](std::vector<CheckResult>& out) {
    for (long n = 2; n <= 4; ++n) {
      for (const auto& [p, q] : coprime_pairs(7)) {
        const OracleGridReport grid = oracle_knot(TorusKnot(p, q), n, trials, seed, tol);
        std::ostringstream detail;
        detail << grid.components.size() << " components, max relative error " << grid.max_relative_error;
        for (const auto& r : grid.components) {
          if (!r.passed) detail << "; " << r.component.to_string() << ": " << r.failures.front();
        }
        out.push_back({knot_name(p, q) + " n=" + std::to_string(n), grid.passed, detail.str()});
      }
    }
  });
}

SuiteReport verify_lemmas() {
  return timed("lemmas", [](std::vector<CheckResult>& out) {
    for (long p = 2; p <= 10; ++p) {
      for (long m = 0; m <= 12; ++m) {
        const std::string at = " p=" + std::to_string(p) + " m=" + std::to_string(m);
        const IdentityValues odd = odd_sin_power_sum(p, m);
        out.push_back(equal_check("odd-a sine power sum" + at, odd.lhs, odd.rhs));
        const IdentityValues full = full_sin_power_sum(p, m);
        out.push_back(equal_check("all-a sine power sum" + at, full.lhs, full.rhs));
      }
    }
    for (long p = 3; p <= 16; ++p) {
      for (long m = -1; m <= 6; ++m) {
        const Rational v = verlinde_rank(p, m);
        CheckResult c{"Verlinde rank V_" + std::to_string(p) + " m=" + std::to_string(m) + " is an integer",
                      v.get_den() == 1, "value " + rational_to_string(v)};
        out.push_back(c);
      }
    }
    for (long q = 3; q <= 15; q += 2) {
      for (long m = -1; m <= 6; ++m) {
        Rational scale = 1;
        for (long i = 0; i < m + 1; ++i) scale *= 2;
        out.push_back(equal_check("rank V_" + std::to_string(2 * q) + " = 2^(m+1) rank V_" + std::to_string(q) +
                                      " m=" + std::to_string(m),
                                  verlinde_rank(2 * q, m), scale * verlinde_rank(q, m)));
      }
    }
  });
}

SuiteReport verify_powersum() {
  return timed("powersum", [](std::vector<CheckResult>& out) {
    const PowerSumKind kinds[] = {PowerSumKind::sl2_neg, PowerSumKind::sl2_pos, PowerSumKind::adjoint_neg,
                                  PowerSumKind::adjoint_pos};
    for (const auto kind : kinds) {
      const bool positive = kind == PowerSumKind::sl2_pos || kind == PowerSumKind::adjoint_pos;
      for (const auto& [p, q] : coprime_pairs(9)) {
        for (long m = positive ? -1 : 0; m <= 5; ++m) {
          const PowerSumReport r = power_sum(kind, p, q, m);
          const std::string name = to_string(kind) + " " + knot_name(p, q) + " m=" + std::to_string(m);
          std::string detail = "closed " + rational_to_string(r.closed_form) + ", brute " +
                               rational_to_string(r.brute_force) + ", scale " +
                               rational_to_string(r.integrality_scale);
          if (!r.closed_equals_brute) detail += "; closed form differs from brute force";
          if (!r.scale_integral) detail += "; closed form times scale is not an integer";
          out.push_back({name, r.passes, detail});
          for (const auto& [claim, ok] : r.side_checks) out.push_back({name + " " + claim, ok, ""});
        }
      }
    }
    // m = 1 values on the wider range of the inverse-sum statements
    for (const auto& [p, q] : coprime_pairs(11)) {
      const PowerSumReport sl2 = sl2_neg_power_sum(p, q, 1);
      Rational want = (Rational(p) / 2 - p % 2) * (Rational(q) / 2 - q % 2);
      out.push_back(equal_check("sl2-neg inverse sum " + knot_name(p, q), sl2.brute_force, want));
      const PowerSumReport adj = adjoint_neg_power_sum(p, q, 1);
      out.push_back(equal_check("adj-neg inverse sum " + knot_name(p, q), adj.brute_force, 2));
    }
    // the q = 2 specialization: a single factor, since eps_2 = 0 makes the other one 1
    for (long p = 3; p <= 9; p += 2) {
      for (long m = 0; m <= 5; ++m) {
        const PowerSumReport r = sl2_neg_power_sum(2, p, m);
        out.push_back(equal_check("sl2-neg K(2," + std::to_string(p) + ") single factor m=" + std::to_string(m),
                                  r.brute_force, sl2_neg_factor(p, m) * sl2_neg_factor(2, m)));
      }
    }
  });
}

namespace {

struct SeifertSample {
  SeifertIndex index;
  SeifertRepData rep;
};

SeifertSample random_seifert(std::mt19937_64& rng) {
  auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  SeifertSample s;
  s.index.euler_v = uniform(-3, 3);
  s.index.genus = uniform(1, 3);
  s.rep.n = uniform(2, 4);
  s.rep.omega_exp = uniform(0, s.rep.n - 1);
  const long m = uniform(0, 3);
  for (long j = 0; j < m; ++j) {
    const long alpha = uniform(2, 7);
    long beta = 0;
    do {
      beta = uniform(-2 * alpha, 2 * alpha);
    } while (std::gcd(alpha, beta) != 1);
    s.index.fibers.push_back({alpha, beta});
    // e^alpha omega^beta = 1 at order n alpha: exponent -K beta + n r
    std::vector<RootExponent> eigs;
    for (long k = 0; k < s.rep.n; ++k) {
      eigs.emplace_back(s.rep.n * alpha, -s.rep.omega_exp * beta + s.rep.n * uniform(0, alpha - 1));
    }
    s.rep.eigen_exps.push_back(std::move(eigs));
  }
  return s;
}

}  // namespace

SuiteReport verify_seifert(std::uint64_t seed, long samples) {
  return timed("seifert", [=](std::vector<CheckResult>& out) {
    {
      const SeifertIndex index = SeifertIndex::parse("0,1;(2,1)");
      const SeifertRepData rep{2, 1, {{RootExponent(4, 1), RootExponent(4, 3)}}};
      const TorsionValue tv = seifert_torsion(index, rep);
      out.push_back({"hand case g=1 (2,1) n=2 omega=-1 gives 2", tv.value == CyclotomicNumber(2) && tv.acyclic,
                     tv.value.to_string()});
      const SeifertCertificate cert = seifert_integrality_certificate(index, rep);
      out.push_back({"hand case certificate", cert.integral && cert.value == CyclotomicNumber(2), ""});
      bool caught = false;
      try {
        seifert_integrality_certificate(index, rep, tv.value + 1);
      } catch (const CertificateMismatch&) {
        caught = true;
      }
      out.push_back({"fault-injected claimed value is rejected", caught, ""});
    }
    std::mt19937_64 rng(seed);
    long accepted = 0;
    long degenerate = 0;
    long mismatches = 0;
    long non_integral = 0;
    long asymmetric = 0;
    std::string first;
    while (accepted < samples) {
      SeifertSample s = random_seifert(rng);
      const TorsionValue direct = seifert_torsion(s.index, s.rep);
      bool has_unit_factor = false;
      for (const auto& row : fiber_factors(s.index, s.rep)) {
        for (const auto& x : row) has_unit_factor = has_unit_factor || x.is_one();
      }
      if (has_unit_factor) {
        ++degenerate;
        if (direct.acyclic || !direct.value.is_zero()) {
          ++mismatches;
          if (first.empty()) first = s.index.to_string() + ": degenerate data must give 0";
        }
        continue;
      }
      ++accepted;
      try {
        const SeifertCertificate cert = seifert_integrality_certificate(s.index, s.rep, direct.value);
        if (!cert.integral || !direct.value.is_algebraic_integer()) {
          ++non_integral;
          if (first.empty()) first = s.index.to_string() + ": value not integral";
        }
      } catch (const CertificateMismatch& e) {
        ++mismatches;
        if (first.empty()) first = e.what();
      }
      // reversed fibers and eigenvalues give the same value
      SeifertSample t = s;
      std::reverse(t.index.fibers.begin(), t.index.fibers.end());
      std::reverse(t.rep.eigen_exps.begin(), t.rep.eigen_exps.end());
      for (auto& row : t.rep.eigen_exps) std::reverse(row.begin(), row.end());
      if (!(seifert_torsion(t.index, t.rep).value == direct.value)) {
        ++asymmetric;
        if (first.empty()) first = s.index.to_string() + ": not invariant under permutation";
      }
    }
    std::ostringstream detail;
    detail << accepted << " acyclic-form samples, " << degenerate << " degenerate draws; mismatches " << mismatches
           << ", non-integral " << non_integral << ", permutation failures " << asymmetric;
    if (!first.empty()) detail << "; first: " << first;
    out.push_back({"direct formula equals division-free certificate on random data",
                   mismatches == 0 && non_integral == 0 && asymmetric == 0, detail.str()});
  });
}

SuiteReport verify_sl2() {
  return timed("sl2", [](std::vector<CheckResult>& out) {
    for (const auto& [p, q] : coprime_pairs(11)) {
      const TorusKnot knot(p, q);
      long mismatches = 0;
      std::string first;
      const auto comps = enumerate_components(knot, 2);
      for (const auto& c : comps) {
        const auto [a, b] = sl2_index(c);
        const TorsionValue from_poly = torsion_from_component(c);
        const TorsionValue closed = sl2_torsion(knot, a, b);
        if (!(from_poly.value == closed.value) || from_poly.acyclic != closed.acyclic) {
          ++mismatches;
          if (first.empty()) {
            first = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + "): " + from_poly.value.to_string() +
                    " vs " + closed.value.to_string();
          }
        }
      }
      out.push_back({knot_name(p, q) + " SL2 torsion from polynomial = closed form", mismatches == 0,
                     std::to_string(comps.size()) + " components" + (first.empty() ? "" : "; first " + first)});
    }
  });
}

}  // namespace torsionkit
