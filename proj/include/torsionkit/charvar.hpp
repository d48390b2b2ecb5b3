#pragma once

// Components of the irreducible SL_n(C)-character variety of the torus knot
// group <x, y | x^p = y^q>.
//
// A component is fixed by its eigenvalue data: omega = e(k/n) is the scalar
// value of x^p = y^q, the eigenvalues of x are alpha_i = e((k + n a_i)/(np))
// with multiplicity v_i, and the eigenvalues of y are
// beta_j = e((k + n b_j)/(nq)) with multiplicity w_j. All of them live in
// Q(zeta_{npq}).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torsionkit/cyclotomic.hpp"

namespace torsionkit {

class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TorusKnot {
  long p = 2;
  long q = 3;

  TorusKnot() = default;
  /// Throws ConstraintViolation unless p, q >= 2 are coprime.
  TorusKnot(long p, long q);

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

/// A residue class together with its multiplicity.
struct EigenClass {
  long exp = 0;
  long mult = 1;

  friend auto operator<=>(const EigenClass&, const EigenClass&) = default;
};

struct ComponentData {
  TorusKnot knot;
  long n = 2;
  long k = 0;
  std::vector<EigenClass> a;  // residues mod p, sorted
  std::vector<EigenClass> b;  // residues mod q, sorted

  long conductor() const { return n * knot.p * knot.q; }
  RootExponent omega() const { return {n, k}; }
  RootExponent alpha(std::size_t i) const { return {n * knot.p, k + n * a.at(i).exp}; }
  RootExponent beta(std::size_t j) const { return {n * knot.q, k + n * b.at(j).exp}; }
  /// e((k + n c)/(np)) for an arbitrary residue c mod p.
  RootExponent alpha_for(long c) const { return {n * knot.p, k + n * c}; }
  RootExponent beta_for(long c) const { return {n * knot.q, k + n * c}; }
  long max_a_mult() const;
  long max_b_mult() const;

  std::string to_string() const;

  friend bool operator==(const ComponentData& x, const ComponentData& y) {
    return x.knot == y.knot && x.n == y.n && x.k == y.k && x.a == y.a && x.b == y.b;
  }
  /// Lexicographic on (k, a, b).
  friend bool operator<(const ComponentData& x, const ComponentData& y);
};

/// Empty when valid, otherwise the first violated constraint.
std::optional<std::string> validation_error(const ComponentData& c);
/// Throws ConstraintViolation when invalid.
void validate(const ComponentData& c);

/// All components for the given dimension, each once, ordered by (k, a, b).
std::vector<ComponentData> enumerate_components(const TorusKnot& knot, long n);

/// n^2 + 1 - sum v_i^2 - sum w_j^2
long component_dimension(const ComponentData& c);

long count_components(const TorusKnot& knot, long n, std::optional<long> dimension = std::nullopt);

/// The pair (r, s) with p s - q r = 1 and 0 < s <= q.
std::pair<long, long> meridian_coeffs(const TorusKnot& knot);

struct SL2ComponentInfo {
  long a = 1;
  long b = 1;
  CyclotomicNumber trace_x;  // 2 cos(pi a / p)
  CyclotomicNumber trace_y;  // 2 cos(pi b / q)
  /// 2 cos(pi (r a / p + s b / q)) and 2 cos(pi (r a / p - s b / q)).
  std::array<CyclotomicNumber, 2> excluded_traces;
  long r = 0;
  long s = 0;
};

/// Throws ConstraintViolation unless 0 < a < p, 0 < b < q and a = b mod 2.
void check_sl2_index(const TorusKnot& knot, long a, long b);
SL2ComponentInfo sl2_component_info(const TorusKnot& knot, long a, long b);
/// The (a, b) index of a two-dimensional component.
std::pair<long, long> sl2_index(const ComponentData& c);

}  // namespace torsionkit
