#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N).
//
// An element is stored in the power basis {1, z, ..., z^(phi(N)-1)} of
// Q[x]/(Phi_N(x)), with z = exp(2*pi*i/N). Elements built at different
// conductors are lifted to the least common multiple before any binary
// operation; nothing is ever descended to a smaller conductor.
//
// The ring of integers of Q(zeta_N) is Z[zeta_N] and the power basis is an
// integral basis of it, so an element is an algebraic integer exactly when
// every power-basis coefficient is an integer.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "torsionkit/quad.hpp"

namespace torsionkit {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotRational : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
/// Mathematical modulus, always in [0, m).
long mod_floor(long a, long m);

/// Coefficients of Phi_N in ascending degree. Cached; safe to call from
/// several threads.
const std::vector<Integer>& cyclotomic_polynomial(long n);

/// The root of unity exp(2*pi*i*exponent/order).
class RootExponent {
 public:
  RootExponent() = default;
  RootExponent(long order, long exponent);

  long order() const noexcept { return order_; }
  long exponent() const noexcept { return exponent_; }

  /// Same root expressed at the smallest possible order.
  RootExponent reduced() const;
  /// Same root expressed at order `multiple`; `multiple` must be a multiple of order().
  RootExponent at_order(long multiple) const;
  RootExponent inverse() const;
  RootExponent pow(long e) const;
  bool is_one() const noexcept { return exponent_ == 0; }

  friend RootExponent operator*(const RootExponent& a, const RootExponent& b);
  /// Equality of the underlying complex numbers.
  friend bool operator==(const RootExponent& a, const RootExponent& b);
  /// Orders by the angle exponent/order in [0, 1).
  friend std::strong_ordering operator<=>(const RootExponent& a, const RootExponent& b);

  /// "e(a/N)" with a/N in lowest terms; "1" for the trivial root.
  std::string to_string() const;

 private:
  long order_ = 1;
  long exponent_ = 0;
};

class CyclotomicNumber {
 public:
  /// Zero at conductor 1.
  CyclotomicNumber();
  CyclotomicNumber(long value);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(const Rational& value, long conductor = 1);

  /// Reduces an arbitrary-length coefficient vector sum c_i z^i modulo Phi_N.
  static CyclotomicNumber from_coefficients(long conductor, std::span<const Rational> coeffs);
  static CyclotomicNumber from_integers(long conductor, std::span<const Integer> coeffs);
  static CyclotomicNumber root_of_unity(const RootExponent& root);
  static CyclotomicNumber root_of_unity(long order, long exponent) {
    return root_of_unity(RootExponent(order, exponent));
  }

  /// Parses the textual form produced by to_string(), e.g. "N=12: 1/2 - 1*z^2".
  static CyclotomicNumber parse(std::string_view text);

  long conductor() const noexcept { return conductor_; }
  /// Power-basis coefficients, length phi(conductor).
  std::vector<Rational> coefficients() const;
  Rational coefficient(std::size_t i) const;
  /// Numerators over the common positive denominator().
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  /// Same element expressed at a multiple of the current conductor.
  CyclotomicNumber lift(long conductor) const;

  bool is_zero() const noexcept;
  bool is_one() const;
  bool is_algebraic_integer() const noexcept { return den_ == 1; }
  std::optional<Rational> as_rational() const;
  /// Like as_rational() but throws NotRational.
  Rational to_rational() const;

  /// Throws DivisionByZero on zero.
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;
  /// Image under complex conjugation z -> z^-1.
  CyclotomicNumber conjugate() const;
  /// Multiplication by a root of unity; cheaper than a general product.
  CyclotomicNumber times_root(const RootExponent& root) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Principal embedding z -> exp(2*pi*i/N).
  Complex embed() const { return embed_conjugate(1); }
  /// Embedding z -> exp(2*pi*i*k/N), gcd(k, N) = 1.
  Complex embed_conjugate(long k) const;

  /// "N=12: 1/2 - 1*z^2"; "N=1: 0" for zero.
  std::string to_string() const;
  /// The coefficient polynomial only, without the conductor prefix.
  std::string body_string() const;

 private:
  CyclotomicNumber(long conductor, std::vector<Integer> num, Integer den);
  void normalize();

  long conductor_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// All phi(N) complex embeddings, ordered by the exponent k in z -> exp(2*pi*i*k/N);
/// the principal one comes first. `precision_bits` must be at least 53; values
/// are computed in binary128 regardless.
std::vector<Complex> conjugate_embeddings(const CyclotomicNumber& x, int precision_bits = 128);

/// (zeta - 1)^-1 for a nontrivial root zeta, computed at the reduced order of
/// the root and cached. Throws DivisionByZero for zeta = 1.
const CyclotomicNumber& inverse_of_root_minus_one(const RootExponent& root);

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

namespace detail {

/// Per-conductor reduction data: Phi_N and its nonzero coefficients.
struct CyclotomicModulus {
  long conductor = 1;
  long degree = 1;
  std::vector<Integer> coeffs;
  /// (index, coefficient) pairs of Phi_N below the leading term.
  std::vector<std::pair<long, std::int64_t>> sparse_tail;
};

const CyclotomicModulus& modulus(long n);

}  // namespace detail

}  // namespace torsionkit
