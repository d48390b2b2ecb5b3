#pragma once

// JSON encodings. Keys keep insertion order so output is byte-stable.
//
//   cyclotomic number: "N=12: 1/2 - 1*z^2"   (z = exp(2 pi i / N))
//   Laurent polynomial: {"var":"t","conductor":N,"terms":[{"exp":e,"coeff":["c0","c1",...]}]}
//                       coeff lists all phi(N) power-basis rationals
//   component: {"p","q","n","k","a":[{"exp","mult"}],"b":[...],"dim"}

#include <json.hpp>

#include "torsionkit/charvar.hpp"
#include "torsionkit/laurent.hpp"
#include "torsionkit/oracle.hpp"
#include "torsionkit/powersum.hpp"
#include "torsionkit/seifert.hpp"
#include "torsionkit/tap.hpp"
#include "torsionkit/torsion.hpp"

namespace torsionkit {

using Json = nlohmann::ordered_json;

Json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const Json& j);

Json to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

Json to_json(const ComponentData& c);
ComponentData component_from_json(const Json& j);

Json to_json(const RootFactor& f);
Json to_json(const RationalFunctionForm& form);

/// {"value","float":[re,im],"acyclic","sign_defined","integral"}
Json to_json(const TorsionValue& tv);

Json to_json(const PowerSumReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const SeifertCertificate& cert);

/// Eigenvalue file: {"fibers":[[{"order":N,"exp":e},...],...]}, one inner list per fiber.
SeifertRepData seifert_rep_from_json(const Json& j, long n, long omega_exp);

std::string rational_json(const Rational& r);

}  // namespace torsionkit
