#pragma once

// Worked SL3 examples for K_{2,3}, K_{2,5}, K_{3,4} and the p = 3 case-(1)
// table, transcribed factor by factor and compared exactly with
// tap_polynomial.

#include <string>
#include <vector>

#include "torsionkit/charvar.hpp"
#include "torsionkit/laurent.hpp"

namespace torsionkit {

/// (e^{i pi num/den} t^t_power + constant)^mult
struct GoldenFactor {
  long num = 0;
  long den = 1;
  long t_power = 1;
  long constant = -1;
  long mult = 1;
};

struct GoldenCase {
  std::string name;
  ComponentData component;
  /// +1 or -1 in front of the product
  long sign = 1;
  std::vector<GoldenFactor> factors;
  /// Extra factor computed from its defining product (the P of the p = 3 table); 1 if unused.
  LaurentPolynomial extra = LaurentPolynomial(CyclotomicNumber(1));
  /// The row as printed, e.g. "-(t^12 - 1)(t^3 + 1)".
  std::string display;

  LaurentPolynomial expected() const;
};

struct GoldenResult {
  std::string name;
  std::string display;
  bool passed = false;
  std::string detail;
};

/// Trefoil, the dimension-4 K_{3,4} component, the six K_{2,5} rows, the six
/// case-(1) and three case-(2) K_{3,4} rows.
std::vector<GoldenCase> golden_cases();
/// The p = 3 case-(1) table instantiated for q = 5, 7, 8 with P expanded directly.
std::vector<GoldenCase> golden_p3_table(long q);

GoldenResult check_golden(const GoldenCase& g);

}  // namespace torsionkit
