#pragma once

// Twisted Alexander polynomials of torus knots on a character-variety
// component, as a factored rational function and as an expanded Laurent
// polynomial.

#include <string>
#include <vector>

#include "torsionkit/charvar.hpp"
#include "torsionkit/laurent.hpp"

namespace torsionkit {

/// (scalar * t^t_power - 1)^mult
struct RootFactor {
  RootExponent scalar;
  long t_power = 1;
  long mult = 1;

  friend bool operator==(const RootFactor& x, const RootFactor& y) {
    return x.scalar == y.scalar && x.t_power == y.t_power && x.mult == y.mult;
  }
};

/// Sorts by (t_power, angle) and merges equal bases.
std::vector<RootFactor> canonical_factors(std::vector<RootFactor> factors);
/// "(e(1/3)*t^6 - 1)^2 (t^3 - 1)"; "1" for an empty product.
std::string factors_string(const std::vector<RootFactor>& factors);

struct RationalFunctionForm {
  std::vector<RootFactor> numerator;
  std::vector<RootFactor> denominator;

  /// Principal-embedding value at a complex t.
  Complex evaluate(const Complex& t) const;
  std::string to_string() const;
};

/// (t^{pq} omega - 1)^n / (prod (t^q alpha_i - 1)^{v_i} prod (t^p beta_j - 1)^{w_j})
RationalFunctionForm tap_closed_form(const ComponentData& c);

/// Factors whose product is the polynomial: with v = max v_i and w = max w_j,
/// (t^{pq} omega - 1)^{n-v-w}, (t^q alpha_i - 1)^{v-v_i}, the complement
/// product over a not in the a-set raised to v, and the same on the b side.
std::vector<RootFactor> tap_factors(const ComponentData& c);

/// seed * prod factors, exact, with all roots expressed at `conductor`.
/// The seed must have integral coefficients for the fast integer path;
/// otherwise a rational fallback is used.
LaurentPolynomial expand_product(const std::vector<RootFactor>& factors, long conductor,
                                 const LaurentPolynomial& seed = LaurentPolynomial(CyclotomicNumber(1)));

LaurentPolynomial tap_polynomial(const ComponentData& c);

/// Maximal-dimension formula (all multiplicities one) computed with plain
/// Laurent arithmetic, independently of expand_product. Throws
/// ConstraintViolation on invalid data.
LaurentPolynomial tap_max_dim(const TorusKnot& knot, long n, long k, std::vector<long> a_set,
                              std::vector<long> b_set);

/// The expansion and the closed form differ by the sign
/// (-1)^{(p+1)v + (q+1)w}, since the product of (xi u - 1) over the p-th roots
/// xi of omega is (-1)^{p+1} (omega u^p - 1).
int expansion_sign(const ComponentData& c);

/// polynomial * prod denominator == expansion_sign(c) * prod numerator, exactly.
bool expansion_consistent(const ComponentData& c, const LaurentPolynomial& polynomial);

}  // namespace torsionkit
