#pragma once

// Reidemeister torsions of torus-knot exteriors.

#include "torsionkit/charvar.hpp"
#include "torsionkit/cyclotomic.hpp"

namespace torsionkit {

struct TorsionValue {
  CyclotomicNumber value;
  /// False exactly when value is zero; non-acyclic torsion is zero by convention.
  bool acyclic = false;
  /// False when the value is only defined up to sign (adjoint torsion); the
  /// positive representative is returned then.
  bool sign_defined = true;
};

/// The twisted Alexander polynomial at t = 1, normalized to the closed-form
/// quotient (omega - 1)^n / prod (alpha_i - 1)^{v_i} prod (beta_j - 1)^{w_j}.
/// Acyclic exactly when the value is nonzero. That holds whenever omega != 1,
/// and for omega = 1 only when n = v + w and residue 0 carries the maximal
/// multiplicity on both sides.
TorsionValue torsion_from_component(const ComponentData& c);

/// The closed-form quotient evaluated with exact divisions, independently of
/// the polynomial expansion. Throws DivisionByZero when it is 0/0 at t = 1.
CyclotomicNumber torsion_by_division(const ComponentData& c);

/// 1 / (4 sin^2(a pi / 2p) sin^2(b pi / 2q)) when a and b are odd, else zero.
TorsionValue sl2_torsion(const TorusKnot& knot, long a, long b);

/// pq / (16 sin^2(a pi / p) sin^2(b pi / q)), the positive representative.
TorsionValue adjoint_torsion(const TorusKnot& knot, long a, long b);

bool certify_torsion_integrality(const TorsionValue& tv);

/// 4 sin^2(a pi / m) = 2 - zeta_m^a - zeta_m^-a, exactly.
CyclotomicNumber four_sin_squared(long m, long a);

}  // namespace torsionkit
