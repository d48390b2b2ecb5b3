#pragma once

// Reduction of coefficient vectors modulo Phi_N, shared by the exact
// arithmetic in CyclotomicNumber and the integer group-ring expansion used for
// twisted Alexander polynomials.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "torsionkit/cyclotomic.hpp"

namespace torsionkit::detail {

struct IntegerOverflow : std::overflow_error {
  IntegerOverflow() : std::overflow_error("64-bit coefficient overflow") {}
};

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(std::int64_t x) { return x == 0; }

// acc -= c * k
inline void sub_mul(Integer& acc, const Integer& c, std::int64_t k) {
  if (k == 1) {
    acc -= c;
  } else if (k == -1) {
    acc += c;
  } else {
    acc -= c * static_cast<long>(k);
  }
}

inline void sub_mul(std::int64_t& acc, std::int64_t c, std::int64_t k) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(c, k, &prod) || __builtin_sub_overflow(acc, prod, &acc)) {
    throw IntegerOverflow();
  }
}

inline void add_to(Integer& acc, const Integer& c) { acc += c; }
inline void add_to(std::int64_t& acc, std::int64_t c) {
  if (__builtin_add_overflow(acc, c, &acc)) throw IntegerOverflow();
}

/// Folds exponents >= N using z^N = 1, then divides by the monic Phi_N.
/// On return `coeffs` has exactly phi(N) entries.
template <class T>
void reduce_mod_cyclotomic(std::vector<T>& coeffs, const CyclotomicModulus& m) {
  const auto n = static_cast<std::size_t>(m.conductor);
  if (coeffs.size() > n) {
    for (std::size_t i = n; i < coeffs.size(); ++i) {
      if (!is_zero(coeffs[i])) add_to(coeffs[i % n], coeffs[i]);
    }
    coeffs.resize(n);
  }
  const auto deg = static_cast<std::size_t>(m.degree);
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    if (is_zero(coeffs[i])) continue;
    const T c = coeffs[i];
    const std::size_t base = i - deg;
    for (const auto& [j, phi_j] : m.sparse_tail) {
      sub_mul(coeffs[base + static_cast<std::size_t>(j)], c, phi_j);
    }
    coeffs[i] = T(0);
  }
  coeffs.resize(deg, T(0));
}

}  // namespace torsionkit::detail
