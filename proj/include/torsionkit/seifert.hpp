#pragma once

// Reidemeister torsion of orientable Seifert fibered spaces with base genus
// g >= 1, from the eigenvalue data of an irreducible SL_n(C)-representation.
//
// The input is eigenvalue data only. Whether an irreducible representation
// with that data exists is not checked.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsionkit/charvar.hpp"
#include "torsionkit/torsion.hpp"

namespace torsionkit {

class CertificateMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SeifertFiber {
  long alpha = 2;
  long beta = 1;
};

/// {v, (o, g); (alpha_1, beta_1), ..., (alpha_m, beta_m)}
struct SeifertIndex {
  long euler_v = 0;
  long genus = 1;
  std::vector<SeifertFiber> fibers;

  /// Parses "v,g;(a1,b1),(a2,b2)"; the fiber list may be empty.
  static SeifertIndex parse(std::string_view text);
  std::string to_string() const;
  /// Throws ConstraintViolation for g < 1, alpha < 2 or gcd(alpha, beta) != 1.
  void validate() const;
};

struct SeifertRepData {
  long n = 2;
  /// rho(h) = omega I_n with omega = e(omega_exp / n).
  long omega_exp = 0;
  /// eigen_exps[j] lists the n eigenvalues of the j-th fiber generator.
  std::vector<std::vector<RootExponent>> eigen_exps;

  RootExponent omega() const { return {n, omega_exp}; }
  /// Throws ConstraintViolation unless every e^{alpha_j} omega^{beta_j} = 1.
  void validate(const SeifertIndex& index) const;
};

/// The unique (mu, nu) with alpha nu - beta mu = -1 and 0 < mu < alpha.
std::pair<long, long> mu_nu(long alpha, long beta);

/// omega^{nu_j} e_{j,k}^{mu_j} for every fiber j and eigenvalue k.
std::vector<std::vector<RootExponent>> fiber_factors(const SeifertIndex& index, const SeifertRepData& rep);

/// (omega - 1)^{n(m + 2g - 2)} / prod_{j,k} (omega^{nu_j} e_{j,k}^{mu_j} - 1);
/// zero and non-acyclic when a denominator factor vanishes or the value is 0.
TorsionValue seifert_torsion(const SeifertIndex& index, const SeifertRepData& rep);

struct SeifertCertificate {
  CyclotomicNumber value;
  /// (omega - 1)^{n(2g - 2)}
  CyclotomicNumber prefactor;
  /// -omega (1 + x + ... + x^{alpha_j - 1}) at x = omega^{nu_j} e_{j,k}^{mu_j},
  /// each equal to (omega - 1) / (x - 1) and visibly in Z[zeta].
  std::vector<CyclotomicNumber> witnesses;
  bool integral = false;
};

/// Division-free recomputation of the torsion. Throws CertificateMismatch when
/// it disagrees with seifert_torsion, ConstraintViolation in the non-acyclic case.
SeifertCertificate seifert_integrality_certificate(const SeifertIndex& index, const SeifertRepData& rep);
/// Same, compared against an externally claimed value instead.
SeifertCertificate seifert_integrality_certificate(const SeifertIndex& index, const SeifertRepData& rep,
                                                   const CyclotomicNumber& claimed);

}  // namespace torsionkit
