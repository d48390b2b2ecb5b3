#pragma once

// Laurent polynomials in t with coefficients in cyclotomic fields.

#include <map>
#include <string>

#include "torsionkit/cyclotomic.hpp"

namespace torsionkit {

class LaurentPolynomial {
 public:
  using Terms = std::map<long, CyclotomicNumber>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const CyclotomicNumber& constant);  // NOLINT(google-explicit-constructor)
  /// The monomial c * t^exponent.
  static LaurentPolynomial monomial(const CyclotomicNumber& c, long exponent);
  /// c * t^exponent - 1
  static LaurentPolynomial binomial(const CyclotomicNumber& c, long exponent);
  static LaurentPolynomial from_terms(Terms terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  long min_exponent() const;
  long max_exponent() const;
  /// max_exponent - min_exponent; throws on zero.
  long span() const;
  /// Coefficient of t^e, zero when absent.
  CyclotomicNumber coefficient(long e) const;
  /// lcm of the coefficient conductors (1 for the zero polynomial).
  long conductor() const;
  bool has_algebraic_integer_coefficients() const;

  /// Sum of coeff * x^exponent. Throws DivisionByZero when x = 0 and a
  /// negative exponent is present.
  CyclotomicNumber evaluate(const CyclotomicNumber& x) const;
  /// Sum of the coefficients, i.e. the value at t = 1.
  CyclotomicNumber value_at_one() const;
  /// Principal complex embedding evaluated at a complex t.
  Complex evaluate(const Complex& t) const;

  LaurentPolynomial pow(long e) const;
  LaurentPolynomial shifted(long by) const;
  /// In-place product with (root * t^exponent - 1); cheaper than a general product.
  LaurentPolynomial& mul_linear_factor(const RootExponent& root, long exponent);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  /// Ascending exponents, e.g. "(N=1: -1) + (N=1: 1)*t^3"; "0" for zero.
  std::string to_string() const;
  /// Descending exponents with compact coefficients, e.g. "t^3 - 1".
  std::string to_pretty() const;

 private:
  void add_term(long e, const CyclotomicNumber& c);
  Terms terms_;
};

/// True when f = +-t^i * g for some integer i.
bool equal_up_to_unit(const LaurentPolynomial& f, const LaurentPolynomial& g);

}  // namespace torsionkit
