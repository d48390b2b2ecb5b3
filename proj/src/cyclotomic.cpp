#include "torsionkit/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "torsionkit/detail/reduce.hpp"

namespace torsionkit {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_floor(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace detail {
namespace {

// Exact quotient of integer polynomials by a monic divisor (ascending coefficients).
std::vector<Integer> divide_exact_monic(std::vector<Integer> dividend, const std::vector<Integer>& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (dividend.size() < divisor.size()) return {Integer(0)};
  std::vector<Integer> quotient(dividend.size() - dd);
  for (std::size_t i = dividend.size(); i-- > dd;) {
    const Integer c = dividend[i];
    quotient[i - dd] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) dividend[i - dd + j] -= c * divisor[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (sgn(dividend[i]) != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  }
  return quotient;
}

class ModulusCache {
 public:
  const CyclotomicModulus& get(long n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(n); it != table_.end()) return *it->second;
    }
    // Divisors first; their entries are inserted by the recursive calls.
    std::vector<Integer> poly(static_cast<std::size_t>(n) + 1);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
      if (n % d == 0) poly = divide_exact_monic(std::move(poly), get(d).coeffs);
    }
    auto entry = std::make_unique<CyclotomicModulus>();
    entry->conductor = n;
    entry->degree = static_cast<long>(poly.size()) - 1;
    for (std::size_t j = 0; j + 1 < poly.size(); ++j) {
      if (sgn(poly[j]) == 0) continue;
      if (!poly[j].fits_slong_p()) throw std::overflow_error("cyclotomic_polynomial: coefficient too large");
      entry->sparse_tail.emplace_back(static_cast<long>(j), poly[j].get_si());
    }
    entry->coeffs = std::move(poly);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(n, std::move(entry));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<long, std::unique_ptr<CyclotomicModulus>> table_;
};

ModulusCache& cache() {
  static ModulusCache instance;
  return instance;
}

}  // namespace

const CyclotomicModulus& modulus(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  return cache().get(n);
}

}  // namespace detail

const std::vector<Integer>& cyclotomic_polynomial(long n) { return detail::modulus(n).coeffs; }

// ---------------------------------------------------------------------------
// RootExponent

RootExponent::RootExponent(long order, long exponent) : order_(order) {
  if (order < 1) throw std::invalid_argument("RootExponent: order must be positive");
  exponent_ = mod_floor(exponent, order);
}

RootExponent RootExponent::reduced() const {
  const long g = std::gcd(order_, exponent_);
  return {order_ / g, exponent_ / g};
}

RootExponent RootExponent::at_order(long multiple) const {
  if (multiple < 1 || multiple % order_ != 0) {
    throw std::invalid_argument("RootExponent::at_order: not a multiple of the order");
  }
  return {multiple, exponent_ * (multiple / order_)};
}

RootExponent RootExponent::inverse() const { return {order_, -exponent_}; }

RootExponent RootExponent::pow(long e) const {
  const __int128 prod = static_cast<__int128>(exponent_) * mod_floor(e, order_);
  return {order_, static_cast<long>(prod % order_)};
}

RootExponent operator*(const RootExponent& a, const RootExponent& b) {
  const long l = std::lcm(a.order_, b.order_);
  return {l, a.exponent_ * (l / a.order_) + b.exponent_ * (l / b.order_)};
}

bool operator==(const RootExponent& a, const RootExponent& b) {
  return static_cast<__int128>(a.exponent_) * b.order_ == static_cast<__int128>(b.exponent_) * a.order_;
}

std::strong_ordering operator<=>(const RootExponent& a, const RootExponent& b) {
  const __int128 lhs = static_cast<__int128>(a.exponent_) * b.order_;
  const __int128 rhs = static_cast<__int128>(b.exponent_) * a.order_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RootExponent::to_string() const {
  if (exponent_ == 0) return "1";
  const RootExponent r = reduced();
  return "e(" + std::to_string(r.exponent_) + "/" + std::to_string(r.order_) + ")";
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber() : conductor_(1), num_(1, Integer(0)), den_(1) {}

CyclotomicNumber::CyclotomicNumber(long value) : CyclotomicNumber(Rational(value), 1) {}

CyclotomicNumber::CyclotomicNumber(const Rational& value, long conductor)
    : conductor_(conductor), num_(static_cast<std::size_t>(euler_phi(conductor))), den_(value.get_den()) {
  num_[0] = value.get_num();
}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Integer> num, Integer den)
    : conductor_(conductor), num_(std::move(num)), den_(std::move(den)) {
  detail::reduce_mod_cyclotomic(num_, detail::modulus(conductor_));
  normalize();
}

void CyclotomicNumber::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return sgn(c) == 0; })) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CyclotomicNumber CyclotomicNumber::from_coefficients(long conductor, std::span<const Rational> coeffs) {
  Integer common = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.emplace_back(c.get_num() * (common / c.get_den()));
  if (num.empty()) num.emplace_back(0);
  return {conductor, std::move(num), common};
}

CyclotomicNumber CyclotomicNumber::from_integers(long conductor, std::span<const Integer> coeffs) {
  std::vector<Integer> num(coeffs.begin(), coeffs.end());
  if (num.empty()) num.emplace_back(0);
  return {conductor, std::move(num), Integer(1)};
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const RootExponent& root) {
  std::vector<Integer> num(static_cast<std::size_t>(root.exponent()) + 1);
  num.back() = 1;
  return {root.order(), std::move(num), Integer(1)};
}

std::vector<Rational> CyclotomicNumber::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational r(c, den_);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

Rational CyclotomicNumber::coefficient(std::size_t i) const {
  if (i >= num_.size()) return Rational(0);
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

CyclotomicNumber CyclotomicNumber::lift(long conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor < 1 || conductor % conductor_ != 0) {
    throw std::invalid_argument("CyclotomicNumber::lift: target is not a multiple of the conductor");
  }
  const auto step = static_cast<std::size_t>(conductor / conductor_);
  std::vector<Integer> num((num_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < num_.size(); ++i) num[i * step] = num_[i];
  return {conductor, std::move(num), den_};
}

bool CyclotomicNumber::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (sgn(num_[i]) != 0) return std::nullopt;
  }
  return coefficient(0);
}

Rational CyclotomicNumber::to_rational() const {
  if (auto r = as_rational()) return *r;
  throw NotRational("value is not rational: " + to_string());
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

bool is_zero_poly(const RatPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return sgn(c) == 0; });
}

// a := a - b * c * x^shift
void sub_scaled(RatPoly& a, const RatPoly& b, const Rational& c, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(b[i]) != 0) a[i + shift] -= b[i] * c;
  }
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
  if (auto r = as_rational()) return CyclotomicNumber(1 / *r, conductor_);

  // Extended Euclid on (Phi_N, a); the cofactor of a is the inverse.
  const auto& phi = cyclotomic_polynomial(conductor_);
  RatPoly r0(phi.begin(), phi.end());
  RatPoly r1(num_.begin(), num_.end());
  trim(r1);
  RatPoly s0{Rational(0)};
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    const Rational lead_inv = 1 / r1.back();
    RatPoly q(r0.size() - r1.size() + 1);
    while (r0.size() >= r1.size() && !is_zero_poly(r0)) {
      const std::size_t shift = r0.size() - r1.size();
      const Rational c = r0.back() * lead_inv;
      q[shift] = c;
      sub_scaled(r0, r1, c, shift);
      r0.pop_back();
      trim(r0);
      if (r0.size() == 1) break;
    }
    trim(q);
    RatPoly s2 = s0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (sgn(q[i]) != 0) sub_scaled(s2, s1, q[i], i);
    }
    trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    std::swap(r0, r1);
    // Make the new remainder monic to keep coefficient growth down.
    const Rational lc = r1.back();
    if (sgn(lc) == 0) throw std::logic_error("inverse: zero remainder in a field");
    for (auto& c : r1) c /= lc;
    for (auto& c : s1) c /= lc;
  }
  const Rational c0 = r1[0];
  for (auto& c : s1) c = c / c0 * den_;
  return from_coefficients(conductor_, s1);
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(Rational(1), conductor_);
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  const auto n = static_cast<std::size_t>(conductor_);
  std::vector<Integer> num(n);
  for (std::size_t i = 0; i < num_.size(); ++i) num[(n - i) % n] = num_[i];
  return {conductor_, std::move(num), den_};
}

CyclotomicNumber CyclotomicNumber::times_root(const RootExponent& root) const {
  const long target = std::lcm(conductor_, root.order());
  const CyclotomicNumber base = lift(target);
  const auto shift = static_cast<std::size_t>(root.at_order(target).exponent());
  if (shift == 0) return base;
  std::vector<Integer> num(base.num_.size() + shift);
  for (std::size_t i = 0; i < base.num_.size(); ++i) num[i + shift] = base.num_[i];
  return {target, std::move(num), base.den_};
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  const long target = std::lcm(conductor_, rhs.conductor_);
  if (target != conductor_) *this = lift(target);
  const CyclotomicNumber& other = rhs.conductor_ == target ? rhs : rhs.lift(target);
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  const long target = std::lcm(conductor_, rhs.conductor_);
  const CyclotomicNumber a = conductor_ == target ? *this : lift(target);
  const CyclotomicNumber b = rhs.conductor_ == target ? rhs : rhs.lift(target);
  std::vector<Integer> prod(a.num_.size() + b.num_.size() - 1);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (sgn(b.num_[j]) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  *this = CyclotomicNumber(target, std::move(prod), a.den_ * b.den_);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  const long target = std::lcm(a.conductor_, b.conductor_);
  const CyclotomicNumber la = a.lift(target);
  const CyclotomicNumber lb = b.lift(target);
  return la.den_ == lb.den_ && la.num_ == lb.num_;
}

namespace {

Real integer_to_real(const Integer& z) {
  // Limb-wise so that values beyond double range keep full binary128 precision.
  Real result = 0;
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = limbs; i-- > 0;) {
    result = ldexp(result, GMP_NUMB_BITS);
    result += Real(static_cast<unsigned long long>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))));
  }
  return sgn(z) < 0 ? Real(-result) : result;
}

}  // namespace

Complex CyclotomicNumber::embed_conjugate(long k) const {
  if (std::gcd(k, conductor_) != 1) {
    throw std::invalid_argument("embed_conjugate: exponent must be coprime to the conductor");
  }
  Complex sum(0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    sum += integer_to_real(num_[i]) * unit_root(conductor_, k * static_cast<long>(i));
  }
  return sum / integer_to_real(den_);
}

std::vector<Complex> conjugate_embeddings(const CyclotomicNumber& x, int precision_bits) {
  if (precision_bits < 53) throw std::invalid_argument("conjugate_embeddings: precision must be at least 53 bits");
  std::vector<Complex> out;
  for (long k = 1; k <= x.conductor(); ++k) {
    if (std::gcd(k, x.conductor()) == 1) out.push_back(x.embed_conjugate(k));
  }
  return out;
}

const CyclotomicNumber& inverse_of_root_minus_one(const RootExponent& root) {
  static std::shared_mutex mutex;
  static std::map<std::pair<long, long>, std::unique_ptr<CyclotomicNumber>> table;
  if (root.is_one()) throw DivisionByZero("inverse of zeta - 1 with zeta = 1");
  const RootExponent r = root.reduced();
  const std::pair<long, long> key{r.order(), r.exponent()};
  {
    std::shared_lock lock(mutex);
    if (auto it = table.find(key); it != table.end()) return *it->second;
  }
  auto value = std::make_unique<CyclotomicNumber>((CyclotomicNumber::root_of_unity(r) - 1).inverse());
  std::unique_lock lock(mutex);
  auto [it, inserted] = table.try_emplace(key, std::move(value));
  return *it->second;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string CyclotomicNumber::body_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    Rational c = coefficient(i);
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    out << rational_to_string(abs(c));
    if (i > 0) out << "*z^" << i;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

std::string CyclotomicNumber::to_string() const {
  return "N=" + std::to_string(conductor_) + ": " + body_string();
}

CyclotomicNumber CyclotomicNumber::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (text.substr(0, 2) != "N=" || colon == std::string_view::npos) {
    throw std::invalid_argument("cyclotomic text must look like 'N=<conductor>: <terms>'");
  }
  const long conductor = std::stol(std::string(text.substr(2, colon - 2)));
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  std::string body;
  for (char c : text.substr(colon + 1)) {
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  }
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      sign = body[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < body.size() && body[end] != '+' && body[end] != '-') ++end;
    const std::string term = body.substr(pos, end - pos);
    pos = end;
    Rational coeff(1);
    std::size_t power = 0;
    const auto star = term.find('*');
    const std::string head = star == std::string::npos ? term : term.substr(0, star);
    if (head.rfind("z", 0) == 0) {
      power = head.size() > 1 ? std::stoul(head.substr(2)) : 1;
    } else {
      coeff = parse_rational(head);
      if (star != std::string::npos) {
        const std::string tail = term.substr(star + 1);
        if (tail.rfind("z", 0) != 0) throw std::invalid_argument("malformed term: " + term);
        power = tail.size() > 1 ? std::stoul(tail.substr(2)) : 1;
      }
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * coeff;
  }
  if (coeffs.empty()) throw std::invalid_argument("empty cyclotomic body");
  return from_coefficients(conductor, coeffs);
}

}  // namespace torsionkit
