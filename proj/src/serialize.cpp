#include "torsionkit/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsionkit {

std::string rational_json(const Rational& r) { return rational_to_string(r); }

Json to_json(const CyclotomicNumber& x) { return x.to_string(); }

CyclotomicNumber cyclotomic_from_json(const Json& j) { return CyclotomicNumber::parse(j.get<std::string>()); }

Json to_json(const LaurentPolynomial& f) {
  const long conductor = f.conductor();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json coeff = Json::array();
    for (const auto& r : c.lift(conductor).coefficients()) coeff.push_back(rational_json(r));
    terms.push_back(Json{{"exp", e}, {"coeff", coeff}});
  }
  return Json{{"var", "t"}, {"conductor", conductor}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
  if (j.at("var").get<std::string>() != "t") throw std::invalid_argument("Laurent JSON: var must be \"t\"");
  const long conductor = j.at("conductor").get<long>();
  if (conductor < 1) throw std::invalid_argument("Laurent JSON: conductor must be positive");
  LaurentPolynomial::Terms terms;
  for (const auto& t : j.at("terms")) {
    std::vector<Rational> coeffs;
    for (const auto& c : t.at("coeff")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (static_cast<long>(coeffs.size()) != euler_phi(conductor)) {
      throw std::invalid_argument("Laurent JSON: coefficient vector length must be phi(conductor)");
    }
    const long e = t.at("exp").get<long>();
    if (terms.count(e)) throw std::invalid_argument("Laurent JSON: repeated exponent");
    terms.emplace(e, CyclotomicNumber::from_coefficients(conductor, coeffs));
  }
  return LaurentPolynomial::from_terms(std::move(terms));
}

namespace {

Json classes_json(const std::vector<EigenClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(Json{{"exp", c.exp}, {"mult", c.mult}});
  return out;
}

std::vector<EigenClass> classes_from_json(const Json& j) {
  std::vector<EigenClass> out;
  for (const auto& c : j) out.push_back({c.at("exp").get<long>(), c.at("mult").get<long>()});
  std::sort(out.begin(), out.end());
  return out;
}

Json root_json(const RootExponent& r) { return Json{{"order", r.order()}, {"exp", r.exponent()}}; }

}  // namespace

Json to_json(const ComponentData& c) {
  return Json{{"p", c.knot.p},          {"q", c.knot.q},          {"n", c.n},
              {"k", c.k},               {"a", classes_json(c.a)}, {"b", classes_json(c.b)},
              {"dim", component_dimension(c)}};
}

ComponentData component_from_json(const Json& j) {
  ComponentData c;
  c.knot = TorusKnot(j.at("p").get<long>(), j.at("q").get<long>());
  c.n = j.at("n").get<long>();
  c.k = j.at("k").get<long>();
  c.a = classes_from_json(j.at("a"));
  c.b = classes_from_json(j.at("b"));
  validate(c);
  if (j.contains("dim") && j.at("dim").get<long>() != component_dimension(c)) {
    throw ConstraintViolation("component JSON: dim does not match the eigenvalue data");
  }
  return c;
}

Json to_json(const RootFactor& f) {
  return Json{{"root", root_json(f.scalar)}, {"t_power", f.t_power}, {"mult", f.mult}};
}

Json to_json(const RationalFunctionForm& form) {
  Json num = Json::array();
  Json den = Json::array();
  for (const auto& f : form.numerator) num.push_back(to_json(f));
  for (const auto& f : form.denominator) den.push_back(to_json(f));
  return Json{{"numerator", num}, {"denominator", den}, {"text", form.to_string()}};
}

Json to_json(const TorsionValue& tv) {
  const Complex z = tv.value.embed();
  return Json{{"value", to_json(tv.value)},
              {"float", Json::array({to_double(z.real()), to_double(z.imag())})},
              {"acyclic", tv.acyclic},
              {"sign_defined", tv.sign_defined},
              {"integral", certify_torsion_integrality(tv)}};
}

Json to_json(const PowerSumReport& r) {
  Json j{{"p", r.p}, {"q", r.q}, {"m", r.m}, {"kind", to_string(r.kind)}};
  if (r.curve) j["curve"] = Json::array({r.curve->first, r.curve->second});
  j["closed_form"] = rational_json(r.closed_form);
  j["brute_force"] = rational_json(r.brute_force);
  j["integrality_scale"] = rational_json(r.integrality_scale);
  j["closed_equals_brute"] = r.closed_equals_brute;
  j["scale_integral"] = r.scale_integral;
  j["passes"] = r.passes;
  Json side = Json::array();
  for (const auto& [name, ok] : r.side_checks) side.push_back(Json{{"check", name}, {"passes", ok}});
  j["side_checks"] = side;
  return j;
}

Json to_json(const ComparisonReport& r) {
  return Json{{"component", to_json(r.component)}, {"trials", r.trials},
              {"tolerance", r.tolerance},          {"max_relative_error", r.max_relative_error},
              {"passed", r.passed},                {"failures", r.failures}};
}

Json to_json(const SeifertCertificate& cert) {
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(to_json(w));
  return Json{{"value", to_json(cert.value)},
              {"prefactor", to_json(cert.prefactor)},
              {"witnesses", witnesses},
              {"integral", cert.integral}};
}

SeifertRepData seifert_rep_from_json(const Json& j, long n, long omega_exp) {
  SeifertRepData rep;
  rep.n = n;
  rep.omega_exp = omega_exp;
  for (const auto& fiber : j.at("fibers")) {
    std::vector<RootExponent> eigs;
    for (const auto& e : fiber) eigs.emplace_back(e.at("order").get<long>(), e.at("exp").get<long>());
    rep.eigen_exps.push_back(std::move(eigs));
  }
  return rep;
}

}  // namespace torsionkit
