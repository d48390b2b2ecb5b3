#pragma once

// Power sums of SL2 and adjoint torsions of torus knots: the trigonometric
// binomial identities, Verlinde ranks, closed forms and brute-force sums over
// the enumerated SL2 components.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionkit/cyclotomic.hpp"

namespace torsionkit {

enum class PowerSumKind { sl2_neg, sl2_pos, adjoint_neg, adjoint_pos };

std::string to_string(PowerSumKind kind);
/// Accepts "sl2-neg", "sl2-pos", "adj-neg", "adj-pos" (and underscore forms).
PowerSumKind parse_power_sum_kind(const std::string& text);

struct PowerSumReport {
  long p = 2;
  long q = 3;
  long m = 1;
  PowerSumKind kind = PowerSumKind::sl2_neg;
  std::optional<std::pair<long, long>> curve;
  Rational closed_form;
  Rational brute_force;
  /// closed_form * integrality_scale is claimed to be an integer.
  Rational integrality_scale;
  bool closed_equals_brute = false;
  bool scale_integral = false;
  /// closed_equals_brute && scale_integral
  bool passes = false;
  /// Additional named claims for this kind (m = 1 values, odd-odd refinement, ...).
  std::vector<std::pair<std::string, bool>> side_checks;
};

struct IdentityValues {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

/// p * sum_{|l| <= m/p} sign(l) C(2m, m + pl) where sign(l) = (-1)^{sign_factor * l}.
Integer binomial_alternating_sum(long p, long m, long sign_factor);

/// sum over odd a in (0, 2p) of (4 sin^2(a pi / 2p))^m, exactly and by binomials.
IdentityValues odd_sin_power_sum(long p, long m);
/// sum over 0 < a < p of (4 sin^2(a pi / p))^m, exactly and by binomials.
IdentityValues full_sin_power_sum(long p, long m);

/// sum over even a in (0, p) of (p / (4 sin^2(a pi / p)))^m; throws NotRational
/// if the exact sum is irrational.
Rational verlinde_rank(long p, long m);

/// p / 2^{m+1} * sum_l (-1)^{(p+1)l} C(2m, m + pl) - 2^{m-1} eps_p, which equals
/// sum over odd a in (0, p) of (2 sin^2(a pi / 2p))^m.
Rational sl2_neg_factor(long p, long m);

PowerSumReport sl2_neg_power_sum(long p, long q, long m);
PowerSumReport sl2_pos_power_sum(long p, long q, long m);
/// `curve` = (u, w) for the curve mu^u lambda^w; |u - pq w| must be nonzero.
PowerSumReport adjoint_neg_power_sum(long p, long q, long m,
                                     std::optional<std::pair<long, long>> curve = std::nullopt);
PowerSumReport adjoint_pos_power_sum(long p, long q, long m);

PowerSumReport power_sum(PowerSumKind kind, long p, long q, long m,
                         std::optional<std::pair<long, long>> curve = std::nullopt);

}  // namespace torsionkit
