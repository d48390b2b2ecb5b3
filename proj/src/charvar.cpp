#include "torsionkit/charvar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace torsionkit {

TorusKnot::TorusKnot(long p_, long q_) : p(p_), q(q_) {
  if (p < 2 || q < 2) throw ConstraintViolation("torus knot parameters must be at least 2");
  if (std::gcd(p, q) != 1) throw ConstraintViolation("torus knot parameters must be coprime");
}

namespace {

long max_mult(const std::vector<EigenClass>& classes) {
  long m = 0;
  for (const auto& c : classes) m = std::max(m, c.mult);
  return m;
}

std::string classes_string(const std::vector<EigenClass>& classes) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out << ',';
    out << classes[i].exp;
    if (classes[i].mult != 1) out << '^' << classes[i].mult;
  }
  out << '}';
  return out.str();
}

std::optional<std::string> check_classes(const std::vector<EigenClass>& classes, long modulus, long n, long k,
                                         const char* name) {
  long total = 0;
  long weighted = k;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (c.exp < 0 || c.exp >= modulus) return std::string(name) + ": residue out of range";
    if (i > 0 && classes[i - 1].exp >= c.exp) return std::string(name) + ": residues must be distinct and sorted";
    if (c.mult < 1) return std::string(name) + ": multiplicities must be positive";
    if (c.mult >= n) return std::string(name) + ": scalar matrix (multiplicity n)";
    total += c.mult;
    weighted += c.mult * c.exp;
  }
  if (total != n) return std::string(name) + ": multiplicities must sum to n";
  if (mod_floor(weighted, modulus) != 0) return std::string(name) + ": determinant condition fails";
  return std::nullopt;
}

// Every sorted multiset of residues mod m with total multiplicity n and no
// class of multiplicity n.
void multisets(long m, long n, long residue, long remaining, std::vector<EigenClass>& current,
               std::vector<std::vector<EigenClass>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (residue == m) return;
  multisets(m, n, residue + 1, remaining, current, out);
  for (long v = 1; v <= remaining && v < n; ++v) {
    current.push_back({residue, v});
    multisets(m, n, residue + 1, remaining - v, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<EigenClass>> all_multisets(long m, long n) {
  std::vector<std::vector<EigenClass>> out;
  std::vector<EigenClass> current;
  multisets(m, n, 0, n, current, out);
  return out;
}

long weighted_sum(const std::vector<EigenClass>& classes) {
  long s = 0;
  for (const auto& c : classes) s += c.mult * c.exp;
  return s;
}

}  // namespace

long ComponentData::max_a_mult() const { return max_mult(a); }
long ComponentData::max_b_mult() const { return max_mult(b); }

std::string ComponentData::to_string() const {
  std::ostringstream out;
  out << "K(" << knot.p << ',' << knot.q << ") n=" << n << " k=" << k << " a=" << classes_string(a)
      << " b=" << classes_string(b);
  return out.str();
}

bool operator<(const ComponentData& x, const ComponentData& y) {
  return std::tie(x.k, x.a, x.b) < std::tie(y.k, y.a, y.b);
}

std::optional<std::string> validation_error(const ComponentData& c) {
  if (c.knot.p < 2 || c.knot.q < 2 || std::gcd(c.knot.p, c.knot.q) != 1) return "invalid torus knot";
  if (c.n < 2) return "dimension must be at least 2";
  if (c.k < 0 || c.k >= c.n) return "k must lie in [0, n)";
  if (auto e = check_classes(c.a, c.knot.p, c.n, c.k, "a")) return e;
  if (auto e = check_classes(c.b, c.knot.q, c.n, c.k, "b")) return e;
  if (c.max_a_mult() + c.max_b_mult() > c.n) return "eigenspaces of x and y share a common subspace";
  return std::nullopt;
}

void validate(const ComponentData& c) {
  if (auto e = validation_error(c)) throw ConstraintViolation("invalid component " + c.to_string() + ": " + *e);
}

std::vector<ComponentData> enumerate_components(const TorusKnot& knot, long n) {
  if (n < 2) throw ConstraintViolation("dimension must be at least 2");
  const auto a_sets = all_multisets(knot.p, n);
  const auto b_sets = all_multisets(knot.q, n);
  std::vector<ComponentData> out;
  for (long k = 0; k < n; ++k) {
    for (const auto& a : a_sets) {
      if (mod_floor(weighted_sum(a) + k, knot.p) != 0) continue;
      const long va = max_mult(a);
      for (const auto& b : b_sets) {
        if (mod_floor(weighted_sum(b) + k, knot.q) != 0) continue;
        if (va + max_mult(b) > n) continue;
        out.push_back(ComponentData{knot, n, k, a, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long component_dimension(const ComponentData& c) {
  long d = c.n * c.n + 1;
  for (const auto& e : c.a) d -= e.mult * e.mult;
  for (const auto& e : c.b) d -= e.mult * e.mult;
  return d;
}

long count_components(const TorusKnot& knot, long n, std::optional<long> dimension) {
  const auto all = enumerate_components(knot, n);
  if (!dimension) return static_cast<long>(all.size());
  return std::count_if(all.begin(), all.end(),
                       [&](const ComponentData& c) { return component_dimension(c) == *dimension; });
}

std::pair<long, long> meridian_coeffs(const TorusKnot& knot) {
  for (long s = 1; s <= knot.q; ++s) {
    if (mod_floor(knot.p * s - 1, knot.q) == 0) return {(knot.p * s - 1) / knot.q, s};
  }
  throw ConstraintViolation("p and q are not coprime");
}

void check_sl2_index(const TorusKnot& knot, long a, long b) {
  if (a <= 0 || a >= knot.p || b <= 0 || b >= knot.q || mod_floor(a - b, 2) != 0) {
    throw ConstraintViolation("invalid SL2 index (" + std::to_string(a) + "," + std::to_string(b) +
                              "): need 0<a<p, 0<b<q, a=b mod 2");
  }
}

namespace {

// z + z^-1 for z = e(e/N)
CyclotomicNumber two_cos(long order, long exponent) {
  return CyclotomicNumber::root_of_unity(order, exponent) + CyclotomicNumber::root_of_unity(order, -exponent);
}

}  // namespace

SL2ComponentInfo sl2_component_info(const TorusKnot& knot, long a, long b) {
  check_sl2_index(knot, a, b);
  SL2ComponentInfo info;
  info.a = a;
  info.b = b;
  std::tie(info.r, info.s) = meridian_coeffs(knot);
  info.trace_x = two_cos(2 * knot.p, a);
  info.trace_y = two_cos(2 * knot.q, b);
  const long order = 2 * knot.p * knot.q;
  info.excluded_traces = {two_cos(order, knot.q * info.r * a + knot.p * info.s * b),
                          two_cos(order, knot.q * info.r * a - knot.p * info.s * b)};
  return info;
}

std::pair<long, long> sl2_index(const ComponentData& c) {
  if (c.n != 2 || c.a.size() != 2 || c.b.size() != 2) {
    throw ConstraintViolation("SL2 index requested for a component that is not two-dimensional");
  }
  auto fold = [](long value, long m) {
    const long v = mod_floor(value, 2 * m);
    return v > m ? 2 * m - v : v;
  };
  return {fold(c.k + 2 * c.a[0].exp, c.knot.p), fold(c.k + 2 * c.b[0].exp, c.knot.q)};
}

}  // namespace torsionkit
