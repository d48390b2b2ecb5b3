#include "torsionkit/seifert.hpp"

#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

namespace torsionkit {

SeifertIndex SeifertIndex::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  static const std::regex head(R"(^(-?\d+),(-?\d+)(?:;(.*))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, head)) {
    throw ConstraintViolation("Seifert index must look like 'v,g;(a1,b1),(a2,b2)'");
  }
  SeifertIndex index;
  index.euler_v = std::stol(m[1]);
  index.genus = std::stol(m[2]);
  const std::string rest = m[3];
  static const std::regex fiber(R"(\((-?\d+),(-?\d+)\))");
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(rest.begin(), rest.end(), fiber); it != std::sregex_iterator(); ++it) {
    const auto pos = static_cast<std::size_t>(it->position());
    if (pos != consumed && !(pos == consumed + 1 && rest[consumed] == ',')) {
      throw ConstraintViolation("malformed fiber list: " + rest);
    }
    index.fibers.push_back({std::stol((*it)[1]), std::stol((*it)[2])});
    consumed = pos + static_cast<std::size_t>(it->length());
  }
  if (consumed != rest.size()) throw ConstraintViolation("malformed fiber list: " + rest);
  index.validate();
  return index;
}

std::string SeifertIndex::to_string() const {
  std::ostringstream out;
  out << euler_v << ',' << genus << ';';
  for (std::size_t j = 0; j < fibers.size(); ++j) {
    if (j) out << ',';
    out << '(' << fibers[j].alpha << ',' << fibers[j].beta << ')';
  }
  return out.str();
}

void SeifertIndex::validate() const {
  if (genus < 1) throw ConstraintViolation("base genus must be at least 1");
  for (const auto& f : fibers) {
    if (f.alpha < 2) throw ConstraintViolation("fiber alpha must be at least 2");
    if (std::gcd(f.alpha, f.beta) != 1) throw ConstraintViolation("fiber (alpha, beta) must be coprime");
  }
}

void SeifertRepData::validate(const SeifertIndex& index) const {
  if (n < 1) throw ConstraintViolation("dimension must be positive");
  if (eigen_exps.size() != index.fibers.size()) {
    throw ConstraintViolation("eigenvalue data must list one fiber per exceptional fiber");
  }
  const RootExponent w = omega();
  for (std::size_t j = 0; j < eigen_exps.size(); ++j) {
    if (static_cast<long>(eigen_exps[j].size()) != n) {
      throw ConstraintViolation("each fiber needs exactly n eigenvalues");
    }
    for (const auto& e : eigen_exps[j]) {
      if (!(e.pow(index.fibers[j].alpha) * w.pow(index.fibers[j].beta)).is_one()) {
        throw ConstraintViolation("eigenvalue " + e.to_string() + " violates e^alpha omega^beta = 1");
      }
    }
  }
}

std::pair<long, long> mu_nu(long alpha, long beta) {
  if (alpha < 2 || std::gcd(alpha, beta) != 1) {
    throw ConstraintViolation("mu_nu: need alpha >= 2 and gcd(alpha, beta) = 1");
  }
  for (long mu = 1; mu < alpha; ++mu) {
    const long rhs = beta * mu - 1;
    if (mod_floor(rhs, alpha) == 0) return {mu, rhs / alpha};
  }
  throw ConstraintViolation("mu_nu: no solution");
}

std::vector<std::vector<RootExponent>> fiber_factors(const SeifertIndex& index, const SeifertRepData& rep) {
  index.validate();
  rep.validate(index);
  std::vector<std::vector<RootExponent>> out;
  for (std::size_t j = 0; j < index.fibers.size(); ++j) {
    const auto [mu, nu] = mu_nu(index.fibers[j].alpha, index.fibers[j].beta);
    std::vector<RootExponent> row;
    for (const auto& e : rep.eigen_exps[j]) row.push_back(rep.omega().pow(nu) * e.pow(mu));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

long target_conductor(const SeifertIndex& index, const SeifertRepData& rep) {
  long l = 1;
  for (const auto& f : index.fibers) l = std::lcm(l, f.alpha);
  return rep.n * l;
}

CyclotomicNumber omega_minus_one(const SeifertRepData& rep) {
  return CyclotomicNumber::root_of_unity(rep.omega()) - 1;
}

}  // namespace

TorsionValue seifert_torsion(const SeifertIndex& index, const SeifertRepData& rep) {
  const auto factors = fiber_factors(index, rep);
  const long target = target_conductor(index, rep);
  const long m = static_cast<long>(index.fibers.size());
  CyclotomicNumber value = omega_minus_one(rep).pow(rep.n * (m + 2 * index.genus - 2));
  for (const auto& row : factors) {
    for (const auto& x : row) {
      if (x.is_one()) return {CyclotomicNumber(Rational(0), target), false, true};
      value *= inverse_of_root_minus_one(x);
    }
  }
  value = value.lift(std::lcm(target, value.conductor()));
  return {value, !value.is_zero(), true};
}

SeifertCertificate seifert_integrality_certificate(const SeifertIndex& index, const SeifertRepData& rep,
                                                   const CyclotomicNumber& claimed) {
  const auto factors = fiber_factors(index, rep);
  const CyclotomicNumber omega = CyclotomicNumber::root_of_unity(rep.omega());
  SeifertCertificate cert;
  cert.prefactor = omega_minus_one(rep).pow(rep.n * (2 * index.genus - 2));
  cert.value = cert.prefactor;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    for (const auto& x : factors[j]) {
      if (x.is_one()) throw ConstraintViolation("integrality certificate needs acyclic data");
      CyclotomicNumber series;
      for (long i = 0; i < index.fibers[j].alpha; ++i) series += CyclotomicNumber::root_of_unity(x.pow(i));
      CyclotomicNumber witness = -omega * series;
      cert.value *= witness;
      cert.witnesses.push_back(std::move(witness));
    }
  }
  cert.integral = cert.value.is_algebraic_integer();
  if (!(cert.value == claimed)) {
    throw CertificateMismatch("division-free value " + cert.value.to_string() + " differs from " +
                              claimed.to_string());
  }
  return cert;
}

SeifertCertificate seifert_integrality_certificate(const SeifertIndex& index, const SeifertRepData& rep) {
  return seifert_integrality_certificate(index, rep, seifert_torsion(index, rep).value);
}

}  // namespace torsionkit
