#pragma once

// Verification suites: worked examples, counting grid, integrality, oracle
// agreement, trigonometric lemmas, power sums, Seifert certificates and the
// SL2 cross-path. Each returns one CheckResult per grid point in a fixed order.

#include <cstdint>
#include <string>
#include <vector>

namespace torsionkit {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  long oracle_trials = 20;
  double oracle_tolerance = 1e-9;
  long seifert_samples = 200;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

/// examples, counting, integrality, oracle, lemmas, powersum, seifert, sl2
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

SuiteReport verify_examples();
/// SL2 counts for coprime 2 <= p < q <= 12, SL3 dimension counts for p < q <= 9.
SuiteReport verify_counting();
/// Coefficients and torsions for n <= 4, coprime p < q <= 7.
SuiteReport verify_integrality();
SuiteReport verify_oracle(std::uint64_t seed, long trials, double tol);
SuiteReport verify_lemmas();
SuiteReport verify_powersum();
SuiteReport verify_seifert(std::uint64_t seed, long samples);
SuiteReport verify_sl2();

}  // namespace torsionkit
