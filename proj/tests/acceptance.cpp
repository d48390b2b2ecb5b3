// One PASS/FAIL line per acceptance criterion. Tolerances, trial counts,
// the seed and the runtime limits are fixed here, not taken from the command line.

#include <CLI11.hpp>
#include <array>
#include <iostream>
#include <string>

#include "torsionkit/verify.hpp"

namespace {

using namespace torsionkit;

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double limit_seconds;
};

constexpr std::array<Criterion, 8> kCriteria{{
    {1, "worked examples match exactly", "examples", 1},
    {2, "component counting grid", "counting", 10},
    {3, "coefficients and torsions are algebraic integers", "integrality", 60},
    {4, "closed form agrees with Fox-calculus determinants", "oracle", 300},
    {5, "trigonometric identities and Verlinde ranks", "lemmas", 60},
    {6, "power-sum closed forms, scales and special values", "powersum", 300},
    {7, "Seifert torsion direct and division-free paths", "seifert", 30},
    {8, "SL2 torsion from polynomial equals closed form", "sl2", 10},
}};

constexpr std::uint64_t kSeed = kDefaultSeed;
constexpr long kOracleTrials = 20;
constexpr double kOracleTolerance = 1e-9;
constexpr long kSeifertSamples = 200;
constexpr std::size_t kShownFailures = 5;

bool run_criterion(const Criterion& c) {
  VerifyOptions options;
  options.seed = kSeed;
  options.oracle_trials = kOracleTrials;
  options.oracle_tolerance = kOracleTolerance;
  options.seifert_samples = kSeifertSamples;
  const SuiteReport report = run_suite(c.suite, options);
  const bool in_time = report.seconds < c.limit_seconds;
  const bool ok = report.passed() && in_time;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  ("
            << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks, " << report.seconds
            << " s of " << c.limit_seconds << " s)\n";
  if (!in_time) std::cout << "      runtime limit exceeded\n";
  std::size_t shown = 0;
  for (const auto& check : report.checks) {
    if (check.passed) continue;
    if (shown == kShownFailures) {
      std::cout << "      ... " << report.failures() - shown << " more\n";
      break;
    }
    std::cout << "      failed: " << check.name;
    if (!check.detail.empty()) std::cout << "  (" << check.detail << ")";
    std::cout << '\n';
    ++shown;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "Run only this criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (criterion != 0 && c.id != criterion) continue;
    all_ok = run_criterion(c) && all_ok;
  }
  return all_ok ? 0 : 1;
}
