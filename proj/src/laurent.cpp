#include "torsionkit/laurent.hpp"

#include <numeric>
#include <sstream>

namespace torsionkit {

LaurentPolynomial::LaurentPolynomial(const CyclotomicNumber& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const CyclotomicNumber& c, long exponent) {
  LaurentPolynomial out;
  if (!c.is_zero()) out.terms_.emplace(exponent, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::binomial(const CyclotomicNumber& c, long exponent) {
  LaurentPolynomial out = monomial(c, exponent);
  out.add_term(0, CyclotomicNumber(-1));
  return out;
}

LaurentPolynomial LaurentPolynomial::from_terms(Terms terms) {
  LaurentPolynomial out;
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) out.terms_.emplace(e, std::move(c));
  }
  return out;
}

void LaurentPolynomial::add_term(long e, const CyclotomicNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

long LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

long LaurentPolynomial::span() const { return max_exponent() - min_exponent(); }

CyclotomicNumber LaurentPolynomial::coefficient(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CyclotomicNumber() : it->second;
}

long LaurentPolynomial::conductor() const {
  long n = 1;
  for (const auto& [e, c] : terms_) n = std::lcm(n, c.conductor());
  return n;
}

bool LaurentPolynomial::has_algebraic_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_algebraic_integer()) return false;
  }
  return true;
}

CyclotomicNumber LaurentPolynomial::evaluate(const CyclotomicNumber& x) const {
  if (terms_.empty()) return CyclotomicNumber();
  if (x.is_zero()) {
    if (min_exponent() < 0) throw DivisionByZero("evaluate: zero base with a negative exponent");
    return coefficient(0);
  }
  // Horner from the top, then the shift by the lowest exponent.
  const long low = min_exponent();
  CyclotomicNumber acc;
  long prev = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc = acc * x.pow(prev - it->first) + it->second;
    prev = it->first;
  }
  return acc * x.pow(low);
}

CyclotomicNumber LaurentPolynomial::value_at_one() const {
  CyclotomicNumber sum;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Complex LaurentPolynomial::evaluate(const Complex& t) const {
  Complex sum(0);
  for (const auto& [e, c] : terms_) sum += c.embed() * int_power(t, e);
  return sum;
}

LaurentPolynomial LaurentPolynomial::pow(long e) const {
  if (e < 0) throw std::domain_error("LaurentPolynomial::pow: negative exponent");
  LaurentPolynomial result(CyclotomicNumber(1));
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

LaurentPolynomial& LaurentPolynomial::mul_linear_factor(const RootExponent& root, long exponent) {
  LaurentPolynomial out = -*this;
  for (const auto& [e, c] : terms_) out.add_term(e + exponent, c.times_root(root));
  *this = std::move(out);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    out << '(' << c.to_string() << ')';
    if (e != 0) out << "*t^" << e;
    first = false;
  }
  return out.str();
}

namespace {

std::string power_string(long e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

}  // namespace

std::string LaurentPolynomial::to_pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string power = power_string(e);
    if (auto r = c.as_rational()) {
      const bool negative = sgn(*r) < 0;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      const Rational mag = abs(*r);
      if (mag != 1 || power.empty()) {
        out << rational_to_string(mag);
        if (!power.empty()) out << '*';
      }
      out << power;
    } else {
      if (!first) out << " + ";
      out << '(' << c.to_string() << ')';
      if (!power.empty()) out << '*' << power;
    }
    first = false;
  }
  return out.str();
}

bool equal_up_to_unit(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.terms().size() != g.terms().size()) return false;
  const LaurentPolynomial aligned = g.shifted(f.min_exponent() - g.min_exponent());
  return f == aligned || f == -aligned;
}

}  // namespace torsionkit
