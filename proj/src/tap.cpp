#include "torsionkit/tap.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "torsionkit/detail/reduce.hpp"

namespace torsionkit {

std::vector<RootFactor> canonical_factors(std::vector<RootFactor> factors) {
  std::sort(factors.begin(), factors.end(), [](const RootFactor& x, const RootFactor& y) {
    if (x.t_power != y.t_power) return x.t_power < y.t_power;
    return x.scalar < y.scalar;
  });
  std::vector<RootFactor> out;
  for (auto& f : factors) {
    if (f.mult == 0) continue;
    if (!out.empty() && out.back().t_power == f.t_power && out.back().scalar == f.scalar) {
      out.back().mult += f.mult;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

std::string factors_string(const std::vector<RootFactor>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (i) out << ' ';
    out << '(';
    if (!f.scalar.is_one()) out << f.scalar.to_string() << '*';
    out << 't';
    if (f.t_power != 1) out << '^' << f.t_power;
    out << " - 1)";
    if (f.mult != 1) out << '^' << f.mult;
  }
  return out.str();
}

namespace {

Complex factors_value(const std::vector<RootFactor>& factors, const Complex& t) {
  Complex v(1);
  for (const auto& f : factors) {
    const Complex base = unit_root(f.scalar.order(), f.scalar.exponent()) * int_power(t, f.t_power) - Complex(1);
    v *= int_power(base, f.mult);
  }
  return v;
}

}  // namespace

Complex RationalFunctionForm::evaluate(const Complex& t) const {
  return factors_value(numerator, t) / factors_value(denominator, t);
}

std::string RationalFunctionForm::to_string() const {
  return factors_string(numerator) + " / (" + factors_string(denominator) + ")";
}

RationalFunctionForm tap_closed_form(const ComponentData& c) {
  validate(c);
  const long p = c.knot.p;
  const long q = c.knot.q;
  const long big = c.conductor();
  RationalFunctionForm form;
  form.numerator.push_back({c.omega().at_order(big), p * q, c.n});
  std::vector<RootFactor> den;
  for (std::size_t i = 0; i < c.a.size(); ++i) den.push_back({c.alpha(i).at_order(big), q, c.a[i].mult});
  for (std::size_t j = 0; j < c.b.size(); ++j) den.push_back({c.beta(j).at_order(big), p, c.b[j].mult});
  form.denominator = canonical_factors(std::move(den));
  return form;
}

std::vector<RootFactor> tap_factors(const ComponentData& c) {
  validate(c);
  const long p = c.knot.p;
  const long q = c.knot.q;
  const long big = c.conductor();
  const long v = c.max_a_mult();
  const long w = c.max_b_mult();
  std::vector<RootFactor> out;
  out.push_back({c.omega().at_order(big), p * q, c.n - v - w});
  std::vector<bool> in_a(static_cast<std::size_t>(p), false);
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    in_a[static_cast<std::size_t>(c.a[i].exp)] = true;
    out.push_back({c.alpha(i).at_order(big), q, v - c.a[i].mult});
  }
  for (long a = 0; a < p; ++a) {
    if (!in_a[static_cast<std::size_t>(a)]) out.push_back({c.alpha_for(a).at_order(big), q, v});
  }
  std::vector<bool> in_b(static_cast<std::size_t>(q), false);
  for (std::size_t j = 0; j < c.b.size(); ++j) {
    in_b[static_cast<std::size_t>(c.b[j].exp)] = true;
    out.push_back({c.beta(j).at_order(big), p, w - c.b[j].mult});
  }
  for (long b = 0; b < q; ++b) {
    if (!in_b[static_cast<std::size_t>(b)]) out.push_back({c.beta_for(b).at_order(big), p, w});
  }
  return canonical_factors(std::move(out));
}

namespace {

// Coefficients in the group ring Z[C_N][t]: rows indexed by t-degree, each a
// length-N vector over the powers of zeta_N. Multiplying by a root of unity is
// a rotation, so no reduction is needed until the end.
template <class T>
class GroupRingPoly {
 public:
  GroupRingPoly(long conductor, long low, long degree_bound)
      : n_(static_cast<std::size_t>(conductor)), low_(low),
        rows_(static_cast<std::size_t>(degree_bound + 1), std::vector<T>()), top_(0) {}

  void set(long e, std::size_t i, T value) {
    auto& row = rows_[static_cast<std::size_t>(e - low_)];
    if (row.empty()) row.assign(n_, T(0));
    row[i] = value;
    top_ = std::max(top_, static_cast<std::size_t>(e - low_));
  }

  // *= (zeta^shift t^d - 1)
  void mul_factor(std::size_t shift, std::size_t d) {
    if (top_ + d >= rows_.size()) throw std::logic_error("group ring polynomial: degree bound exceeded");
    for (std::size_t i = top_ + d + 1; i-- > 0;) {
      auto& row = rows_[i];
      const bool have_src = i >= d && !rows_[i - d].empty();
      if (row.empty()) {
        if (!have_src) continue;
        row.assign(n_, T(0));
      } else {
        for (auto& x : row) x = -x;
      }
      if (!have_src) continue;
      const auto& src = rows_[i - d];
      for (std::size_t j = 0; j < n_; ++j) {
        if (detail::is_zero(src[j])) continue;
        std::size_t k = j + shift;
        if (k >= n_) k -= n_;
        detail::add_to(row[k], src[j]);
      }
    }
    top_ += d;
  }

  LaurentPolynomial finish(long conductor) {
    const auto& m = detail::modulus(conductor);
    LaurentPolynomial::Terms terms;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto& row = rows_[i];
      if (row.empty()) continue;
      detail::reduce_mod_cyclotomic(row, m);
      if (std::all_of(row.begin(), row.end(), [](const T& x) { return detail::is_zero(x); })) continue;
      std::vector<Integer> coeffs;
      coeffs.reserve(row.size());
      for (const auto& x : row) coeffs.emplace_back(to_integer(x));
      terms.emplace(static_cast<long>(i) + low_, CyclotomicNumber::from_integers(conductor, coeffs));
    }
    return LaurentPolynomial::from_terms(std::move(terms));
  }

 private:
  static Integer to_integer(const Integer& x) { return x; }
  static Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }

  std::size_t n_;
  long low_;
  std::vector<std::vector<T>> rows_;
  std::size_t top_;
};

bool integral_seed(const LaurentPolynomial& seed) { return seed.has_algebraic_integer_coefficients(); }

template <class T>
LaurentPolynomial expand_in_group_ring(const std::vector<RootFactor>& factors, long conductor,
                                       const LaurentPolynomial& seed) {
  long degree = seed.span();
  for (const auto& f : factors) {
    if (f.mult < 0) throw std::invalid_argument("expand_product: negative multiplicity");
    if (f.t_power < 1) throw std::invalid_argument("expand_product: t-powers must be positive");
    degree += f.t_power * f.mult;
  }
  GroupRingPoly<T> poly(conductor, seed.min_exponent(), degree);
  for (const auto& [e, c] : seed.terms()) {
    const CyclotomicNumber lifted = c.lift(conductor);
    const auto& num = lifted.numerators();
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (sgn(num[i]) == 0) continue;
      if constexpr (std::is_same_v<T, Integer>) {
        poly.set(e, i, num[i]);
      } else {
        if (!num[i].fits_slong_p()) throw detail::IntegerOverflow();
        poly.set(e, i, num[i].get_si());
      }
    }
  }
  for (const auto& f : factors) {
    const auto shift = static_cast<std::size_t>(f.scalar.at_order(conductor).exponent());
    for (long r = 0; r < f.mult; ++r) poly.mul_factor(shift, static_cast<std::size_t>(f.t_power));
  }
  return poly.finish(conductor);
}

}  // namespace

LaurentPolynomial expand_product(const std::vector<RootFactor>& factors, long conductor,
                                 const LaurentPolynomial& seed) {
  if (seed.is_zero()) return seed;
  long target = std::lcm(conductor, seed.conductor());
  for (const auto& f : factors) target = std::lcm(target, f.scalar.order());
  if (!integral_seed(seed)) {
    LaurentPolynomial out = seed;
    for (const auto& f : factors) {
      for (long r = 0; r < f.mult; ++r) out.mul_linear_factor(f.scalar, f.t_power);
    }
    return out;
  }
  try {
    return expand_in_group_ring<std::int64_t>(factors, target, seed);
  } catch (const detail::IntegerOverflow&) {
    return expand_in_group_ring<Integer>(factors, target, seed);
  }
}

LaurentPolynomial tap_polynomial(const ComponentData& c) { return expand_product(tap_factors(c), c.conductor()); }

LaurentPolynomial tap_max_dim(const TorusKnot& knot, long n, long k, std::vector<long> a_set,
                              std::vector<long> b_set) {
  std::sort(a_set.begin(), a_set.end());
  std::sort(b_set.begin(), b_set.end());
  ComponentData c{knot, n, k, {}, {}};
  for (long a : a_set) c.a.push_back({mod_floor(a, knot.p), 1});
  for (long b : b_set) c.b.push_back({mod_floor(b, knot.q), 1});
  std::sort(c.a.begin(), c.a.end());
  std::sort(c.b.begin(), c.b.end());
  if (static_cast<long>(c.a.size()) != n || static_cast<long>(c.b.size()) != n) {
    throw ConstraintViolation("maximal-dimension data needs n distinct residues on each side");
  }
  validate(c);

  const long p = knot.p;
  const long q = knot.q;
  const auto omega = CyclotomicNumber::root_of_unity(n, k);
  LaurentPolynomial result = LaurentPolynomial::binomial(omega, p * q).pow(n - 2);
  for (long a = 0; a < p; ++a) {
    if (std::binary_search(a_set.begin(), a_set.end(), a)) continue;
    result *= LaurentPolynomial::binomial(CyclotomicNumber::root_of_unity(n * p, k + n * a), q);
  }
  for (long b = 0; b < q; ++b) {
    if (std::binary_search(b_set.begin(), b_set.end(), b)) continue;
    result *= LaurentPolynomial::binomial(CyclotomicNumber::root_of_unity(n * q, k + n * b), p);
  }
  return result;
}

int expansion_sign(const ComponentData& c) {
  const long e = (c.knot.p + 1) * c.max_a_mult() + (c.knot.q + 1) * c.max_b_mult();
  return e % 2 == 0 ? 1 : -1;
}

bool expansion_consistent(const ComponentData& c, const LaurentPolynomial& polynomial) {
  const RationalFunctionForm form = tap_closed_form(c);
  const LaurentPolynomial lhs = expand_product(form.denominator, c.conductor(), polynomial);
  const LaurentPolynomial rhs = expand_product(form.numerator, c.conductor());
  return expansion_sign(c) > 0 ? lhs == rhs : lhs == -rhs;
}

}  // namespace torsionkit
