#pragma once

// Numerical cross-check of the closed-form twisted Alexander polynomial
// against Wada's determinant ratio, computed by Fox calculus from explicit
// matrices X = diag(alpha), Y = C diag(beta) C^-1.
//
// The matrix pair is not checked for irreducibility; only the eigenvalue
// data matters for the determinant ratio.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torsionkit/charvar.hpp"
#include "torsionkit/fox.hpp"
#include "torsionkit/tap.hpp"

namespace torsionkit {

class SingularDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conjugators with condition number above this are redrawn.
inline constexpr double kMaxConjugatorCondition = 1e3;

struct NumericRep {
  long n = 0;
  ComplexMatrix X;
  ComplexMatrix Y;
  std::uint64_t seed = 0;

  /// Eigenvalues repeated by multiplicity; C drawn from `seed`.
  static NumericRep from_component(const ComponentData& c, std::uint64_t seed);
  /// max of |X^p - Y^q|, |det X - 1|, |det Y - 1|
  Real invariant_error(const TorusKnot& knot) const;
};

enum class FoxColumn { x, y };

/// column y: det Phi(dr/dx) / det(t0^p Y - I); column x: det Phi(dr/dy) / det(t0^q X - I),
/// for r = x^p y^-q under x -> t0^q X, y -> t0^p Y.
Complex wada_value(const NumericRep& rep, const TorusKnot& knot, FoxColumn column, const Complex& t0);

/// Whether wada(x) / wada(y) is +-t0^i for some integer i, within `tol`
/// relative. t0 must be real positive or on the unit circle.
bool columns_agree(const NumericRep& rep, const TorusKnot& knot, const Complex& t0, double tol);

/// Seed for one trial of one component; identical inputs give identical streams.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t component_index, std::uint64_t trial);

struct ComparisonReport {
  ComponentData component;
  long trials = 0;
  double tolerance = 0;
  double max_relative_error = 0;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Wada's ratio (column y) for representations drawn per trial against
/// `expected` at random t0 in 0.5 < |t0| < 2 kept away from the zeros and
/// poles of `expected` and of the matrix denominators.
ComparisonReport compare_rep(const ComponentData& rep_data, const RationalFunctionForm& expected, long trials,
                             std::uint64_t seed, double tol, std::uint64_t component_index = 0);

/// compare_rep against the component's own closed form.
ComparisonReport compare_component(const ComponentData& c, long trials, std::uint64_t seed, double tol,
                                   std::uint64_t component_index = 0);

struct OracleGridReport {
  std::vector<ComparisonReport> components;
  bool passed = true;
  double max_relative_error = 0;
};

/// Every component of K_{p,q} in dimension n, in canonical order.
OracleGridReport oracle_knot(const TorusKnot& knot, long n, long trials, std::uint64_t seed, double tol);

}  // namespace torsionkit
