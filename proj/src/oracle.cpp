#include "torsionkit/oracle.hpp"

#include <cmath>
#include <sstream>

namespace torsionkit {

namespace {

// Factors |scalar t^k - 1| below this make t0 too close to a zero or pole.
constexpr double kMinFactorModulus = 0.05;
constexpr int kMaxDraws = 10000;

ComplexMatrix power(const ComplexMatrix& m, long e) {
  ComplexMatrix r = ComplexMatrix::identity(m.size());
  for (long i = 0; i < e; ++i) r = r * m;
  return r;
}

Real max_abs(const ComplexMatrix& m) {
  Real best = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, Real(abs(m(i, j))));
  }
  return best;
}

std::vector<Complex> eigenvalues(long n, const std::vector<EigenClass>& classes, long k, long order) {
  std::vector<Complex> out;
  for (const auto& cls : classes) {
    for (long i = 0; i < cls.mult; ++i) out.push_back(unit_root(order, k + n * cls.exp));
  }
  return out;
}

bool far_from_zeros(const std::vector<RootFactor>& factors, const Complex& t) {
  for (const auto& f : factors) {
    const Complex v = unit_root(f.scalar.order(), f.scalar.exponent()) * int_power(t, f.t_power) - Complex(1);
    if (abs(v) < kMinFactorModulus) return false;
  }
  return true;
}

Complex draw_t0(std::mt19937_64& rng, const RationalFunctionForm& form, const ComponentData& c) {
  std::uniform_real_distribution<double> log_radius(std::log(0.5), std::log(2.0));
  std::uniform_real_distribution<double> angle(0.0, 1.0);
  // the matrix denominators vanish where t^q alpha = 1 or t^p beta = 1
  std::vector<RootFactor> guards = form.numerator;
  guards.insert(guards.end(), form.denominator.begin(), form.denominator.end());
  for (const auto& cls : c.a) guards.push_back({c.alpha_for(cls.exp), c.knot.q, 1});
  for (const auto& cls : c.b) guards.push_back({c.beta_for(cls.exp), c.knot.p, 1});
  for (int i = 0; i < kMaxDraws; ++i) {
    const Real r = exp(Real(log_radius(rng)));
    const Complex t = r * polar_unit(2 * pi_real() * Real(angle(rng)));
    if (abs(t) <= 0.5 || abs(t) >= 2) continue;
    if (far_from_zeros(guards, t)) return t;
  }
  throw std::runtime_error("could not place t0 away from zeros");
}

}  // namespace

NumericRep NumericRep::from_component(const ComponentData& c, std::uint64_t seed) {
  NumericRep rep;
  rep.n = c.n;
  rep.seed = seed;
  const long p = c.knot.p;
  const long q = c.knot.q;
  rep.X = ComplexMatrix::diagonal(eigenvalues(c.n, c.a, c.k, c.n * p));
  const ComplexMatrix d = ComplexMatrix::diagonal(eigenvalues(c.n, c.b, c.k, c.n * q));
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(c.n);
  for (;;) {
    ComplexMatrix conj = random_gaussian_matrix(n, rng);
    if (condition_number(conj) > kMaxConjugatorCondition) continue;
    rep.Y = conj * d * inverse(conj);
    return rep;
  }
}

Real NumericRep::invariant_error(const TorusKnot& knot) const {
  Real err = max_abs(power(X, knot.p) - power(Y, knot.q));
  err = std::max(err, Real(abs(determinant(X) - Complex(1))));
  err = std::max(err, Real(abs(determinant(Y) - Complex(1))));
  return err;
}

Complex wada_value(const NumericRep& rep, const TorusKnot& knot, FoxColumn column, const Complex& t0) {
  const ComplexMatrix tx = rep.X * int_power(t0, knot.q);
  const ComplexMatrix ty = rep.Y * int_power(t0, knot.p);
  const GeneratorImages images(tx, ty);
  const FoxWord r = torus_relator(knot.p, knot.q);
  const auto n = static_cast<std::size_t>(rep.n);
  const bool drop_y = column == FoxColumn::y;
  const Complex num = determinant(evaluate_fox_derivative(r, drop_y ? Generator::x : Generator::y, images));
  const Complex den = determinant((drop_y ? ty : tx) - ComplexMatrix::identity(n));
  if (abs(den) == 0) throw SingularDenominator("det(Phi(g) - I) vanishes at t0");
  return num / den;
}

bool columns_agree(const NumericRep& rep, const TorusKnot& knot, const Complex& t0, double tol) {
  const Complex ratio = wada_value(rep, knot, FoxColumn::x, t0) / wada_value(rep, knot, FoxColumn::y, t0);
  const Real mod_t = abs(t0);
  if (abs(mod_t - 1) < Real(1e-20)) return abs(abs(ratio) - 1) < tol;
  const long i = std::lround(to_double(log(abs(ratio)) / log(mod_t)));
  const Complex unit = int_power(t0, i);
  return abs(ratio - unit) < tol * abs(unit) || abs(ratio + unit) < tol * abs(unit);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t component_index, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(component_index), static_cast<std::uint32_t>(trial)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

ComparisonReport compare_rep(const ComponentData& rep_data, const RationalFunctionForm& expected, long trials,
                             std::uint64_t seed, double tol, std::uint64_t component_index) {
  if (trials < 1) throw std::invalid_argument("compare: need at least one trial");
  ComparisonReport report;
  report.component = rep_data;
  report.trials = trials;
  report.tolerance = tol;
  for (long trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = trial_seed(seed, component_index, static_cast<std::uint64_t>(trial));
    const NumericRep rep = NumericRep::from_component(rep_data, s);
    std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
    const Complex t0 = draw_t0(rng, expected, rep_data);
    const Complex want = expected.evaluate(t0);
    const Complex got = wada_value(rep, rep_data.knot, FoxColumn::y, t0);
    const double rel = to_double(abs(got - want) / abs(want));
    report.max_relative_error = std::max(report.max_relative_error, rel);
    if (!(rel < tol)) {
      std::ostringstream msg;
      msg << "trial " << trial << ": relative error " << rel << " at t0 = " << to_double(t0.real()) << "+"
          << to_double(t0.imag()) << "i";
      report.failures.push_back(msg.str());
    }
  }
  report.passed = report.failures.empty();
  return report;
}

ComparisonReport compare_component(const ComponentData& c, long trials, std::uint64_t seed, double tol,
                                   std::uint64_t component_index) {
  return compare_rep(c, tap_closed_form(c), trials, seed, tol, component_index);
}

OracleGridReport oracle_knot(const TorusKnot& knot, long n, long trials, std::uint64_t seed, double tol) {
  OracleGridReport grid;
  std::uint64_t index = 0;
  for (const auto& c : enumerate_components(knot, n)) {
    auto report = compare_component(c, trials, seed, tol, index++);
    grid.passed = grid.passed && report.passed;
    grid.max_relative_error = std::max(grid.max_relative_error, report.max_relative_error);
    grid.components.push_back(std::move(report));
  }
  return grid;
}

}  // namespace torsionkit
