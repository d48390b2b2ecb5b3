#include "torsionkit/golden.hpp"

#include <algorithm>

#include "torsionkit/tap.hpp"

namespace torsionkit {

namespace {

std::vector<EigenClass> classes(std::vector<std::pair<long, long>> exp_mult) {
  std::vector<EigenClass> out;
  for (const auto& [e, m] : exp_mult) out.push_back({e, m});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EigenClass> distinct(std::vector<long> exps) {
  std::vector<std::pair<long, long>> em;
  for (long e : exps) em.emplace_back(e, 1);
  return classes(em);
}

ComponentData component(long p, long q, long k, std::vector<EigenClass> a, std::vector<EigenClass> b) {
  ComponentData c;
  c.knot = TorusKnot(p, q);
  c.n = 3;
  c.k = k;
  c.a = std::move(a);
  c.b = std::move(b);
  validate(c);
  return c;
}

GoldenCase make(std::string name, ComponentData c, long sign, std::vector<GoldenFactor> factors, std::string display) {
  GoldenCase g;
  g.name = std::move(name);
  g.component = std::move(c);
  g.sign = sign;
  g.factors = std::move(factors);
  g.display = std::move(display);
  return g;
}

// case (1) of K_{2,q}: a = {a2, a2, a3} with a3 = k mod 2
ComponentData k2q(long q, long k, std::vector<long> b) {
  const long a3 = k % 2;
  return component(2, q, k, classes({{1 - a3, 2}, {a3, 1}}), distinct(std::move(b)));
}

// case (1) of K_{3,q}: a = {a2, a2, a3}
ComponentData k3q_case1(long q, long k, long a2, long a3, std::vector<long> b) {
  return component(3, q, k, classes({{a2, 2}, {a3, 1}}), distinct(std::move(b)));
}

// p = 3, case (1): the angles (in units of pi/9) of the single and squared
// t^q factors for each (k, a2, a3).
struct P3Row {
  long k, a2, a3, single, squared;
};
constexpr P3Row kP3Rows[] = {{1, 1, 0, 2, 14}, {1, 2, 1, 8, 2}, {1, 0, 2, 14, 8},
                             {2, 2, 0, 4, 10}, {2, 0, 1, 10, 16}, {2, 1, 2, 16, 4}};

}  // namespace

LaurentPolynomial GoldenCase::expected() const {
  LaurentPolynomial result = extra * LaurentPolynomial(CyclotomicNumber(sign));
  for (const auto& f : factors) {
    const CyclotomicNumber root = CyclotomicNumber::root_of_unity(RootExponent(2 * f.den, f.num));
    const LaurentPolynomial base = LaurentPolynomial::from_terms({{0, CyclotomicNumber(f.constant)}, {f.t_power, root}});
    result = result * base.pow(f.mult);
  }
  return result;
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  out.push_back(make("K(2,3) trefoil", k2q(3, 0, {0, 1, 2}), 1, {{0, 1, 3, -1, 1}}, "t^3 - 1"));
  out.push_back(make("K(3,4) dimension 4", component(3, 4, 0, distinct({0, 1, 2}), distinct({0, 1, 3})), -1,
                     {{0, 1, 12, -1, 1}, {0, 1, 3, 1, 1}}, "-(t^12 - 1)(t^3 + 1)"));

  // K_{2,5}
  out.push_back(make("K(2,5) k=0 {0,1,4}", k2q(5, 0, {0, 1, 4}), 1,
                     {{0, 1, 5, -1, 1}, {4, 5, 2, -1, 1}, {6, 5, 2, -1, 1}},
                     "(t^5-1)(e^{4 pi i/5} t^2-1)(e^{6 pi i/5} t^2-1)"));
  out.push_back(make("K(2,5) k=0 {0,2,3}", k2q(5, 0, {0, 2, 3}), 1,
                     {{0, 1, 5, -1, 1}, {2, 5, 2, -1, 1}, {8, 5, 2, -1, 1}},
                     "(t^5-1)(e^{2 pi i/5} t^2-1)(e^{8 pi i/5} t^2-1)"));
  out.push_back(make("K(2,5) k=1 {0,1,3}", k2q(5, 1, {0, 1, 3}), -1,
                     {{1, 3, 5, 1, 1}, {14, 15, 2, -1, 1}, {26, 15, 2, -1, 1}},
                     "-(e^{pi i/3} t^5+1)(e^{14 pi i/15} t^2-1)(e^{26 pi i/15} t^2-1)"));
  out.push_back(make("K(2,5) k=1 {2,3,4}", k2q(5, 1, {2, 3, 4}), -1,
                     {{1, 3, 5, 1, 1}, {2, 15, 2, -1, 1}, {8, 15, 2, -1, 1}},
                     "-(e^{pi i/3} t^5+1)(e^{2 pi i/15} t^2-1)(e^{8 pi i/15} t^2-1)"));
  out.push_back(make("K(2,5) k=2 {0,1,2}", k2q(5, 2, {0, 1, 2}), 1,
                     {{2, 3, 5, -1, 1}, {22, 15, 2, -1, 1}, {28, 15, 2, -1, 1}},
                     "(e^{2 pi i/3} t^5-1)(e^{22 pi i/15} t^2-1)(e^{28 pi i/15} t^2-1)"));
  out.push_back(make("K(2,5) k=2 {1,3,4}", k2q(5, 2, {1, 3, 4}), 1,
                     {{2, 3, 5, -1, 1}, {4, 15, 2, -1, 1}, {16, 15, 2, -1, 1}},
                     "(e^{2 pi i/3} t^5-1)(e^{4 pi i/15} t^2-1)(e^{16 pi i/15} t^2-1)"));

  // K_{3,4} case (1): P = e^{5 pi i/3} t^3 - 1 for k = 1, e^{pi i/3} t^3 - 1 for k = 2
  for (const auto& r : kP3Rows) {
    const std::vector<long> b = r.k == 1 ? std::vector<long>{0, 1, 2} : std::vector<long>{1, 2, 3};
    const long p_num = r.k == 1 ? 5 : 1;
    out.push_back(make("K(3,4) case 1 k=" + std::to_string(r.k) + " (a2,a3)=(" + std::to_string(r.a2) + "," +
                           std::to_string(r.a3) + ")",
                       k3q_case1(4, r.k, r.a2, r.a3, b), 1,
                       {{r.single, 9, 4, -1, 1}, {r.squared, 9, 4, -1, 2}, {p_num, 3, 3, -1, 1}},
                       "(e^{" + std::to_string(r.single) + " pi i/9} t^4-1)(e^{" + std::to_string(r.squared) +
                           " pi i/9} t^4-1)^2 (e^{" + std::to_string(p_num) + " pi i/3} t^3-1)"));
  }

  // K_{3,4} case (2): a = {0,1,2}, b = {b2, b2, b3}, k = 0
  auto case2 = [](long b2, long b3) {
    return component(3, 4, 0, distinct({0, 1, 2}), classes({{b2, 2}, {b3, 1}}));
  };
  out.push_back(make("K(3,4) case 2 (b2,b3)=(1,2)", case2(1, 2), -1,
                     {{0, 1, 3, 1, 1}, {0, 1, 3, -1, 2}, {1, 2, 3, 1, 2}}, "-(t^3+1)(t^3-1)^2 (i t^3+1)^2"));
  out.push_back(make("K(3,4) case 2 (b2,b3)=(2,0)", case2(2, 0), 1,
                     {{0, 1, 3, -1, 1}, {1, 2, 3, -1, 2}, {1, 2, 3, 1, 2}}, "(t^3-1)(i t^3-1)^2 (i t^3+1)^2"));
  out.push_back(make("K(3,4) case 2 (b2,b3)=(3,2)", case2(3, 2), -1,
                     {{0, 1, 3, 1, 1}, {0, 1, 3, -1, 2}, {1, 2, 3, -1, 2}}, "-(t^3+1)(t^3-1)^2 (i t^3-1)^2"));
  return out;
}

std::vector<GoldenCase> golden_p3_table(long q) {
  const TorusKnot knot(3, q);
  std::vector<GoldenCase> out;
  for (const auto& c : enumerate_components(knot, 3)) {
    if (c.a.size() != 2 || c.b.size() != 3) continue;
    const long a2 = c.a[0].mult == 2 ? c.a[0].exp : c.a[1].exp;
    const long a3 = c.a[0].mult == 2 ? c.a[1].exp : c.a[0].exp;
    const auto row = std::find_if(std::begin(kP3Rows), std::end(kP3Rows),
                                  [&](const P3Row& r) { return r.k == c.k && r.a2 == a2 && r.a3 == a3; });
    if (row == std::end(kP3Rows)) continue;
    // P = prod over b not in the b-set of (e((k/3 + b)/q) t^3 - 1)
    LaurentPolynomial p_factor(CyclotomicNumber(1));
    for (long b = 0; b < q; ++b) {
      if (std::any_of(c.b.begin(), c.b.end(), [b](const EigenClass& e) { return e.exp == b; })) continue;
      const CyclotomicNumber root = CyclotomicNumber::root_of_unity(RootExponent(3 * q, c.k + 3 * b));
      p_factor = p_factor * LaurentPolynomial::binomial(root, 3);
    }
    GoldenCase g = make("K(3," + std::to_string(q) + ") case 1 " + c.to_string(), c, 1,
                        {{row->single, 9, q, -1, 1}, {row->squared, 9, q, -1, 2}},
                        "(e^{" + std::to_string(row->single) + " pi i/9} t^q-1)(e^{" + std::to_string(row->squared) +
                            " pi i/9} t^q-1)^2 P");
    g.extra = p_factor;
    out.push_back(std::move(g));
  }
  return out;
}

GoldenResult check_golden(const GoldenCase& g) {
  GoldenResult r;
  r.name = g.name;
  r.display = g.display;
  try {
    const LaurentPolynomial want = g.expected();
    const LaurentPolynomial got = tap_polynomial(g.component);
    r.passed = want == got;
    if (!r.passed) r.detail = "computed " + got.to_pretty() + ", table " + want.to_pretty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

}  // namespace torsionkit
