#include "torsionkit/quad.hpp"

#include <quadmath.h>

namespace torsionkit {

Real pi_real() { return Real(M_PIq); }

Complex unit_root(long order, long exponent) {
  long e = exponent % order;
  if (e < 0) e += order;
  // Exact values on the axes keep 1, -1, i and -i free of rounding.
  if (e == 0) return Complex(1, 0);
  if (2 * e == order) return Complex(-1, 0);
  if (4 * e == order) return Complex(0, 1);
  if (4 * e == 3 * order) return Complex(0, -1);
  return polar_unit(2 * pi_real() * Real(e) / Real(order));
}

Complex polar_unit(const Real& theta) { return Complex(cos(theta), sin(theta)); }

Complex int_power(const Complex& z, long e) {
  if (e < 0) return Complex(1) / int_power(z, -e);
  Complex result(1);
  Complex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace torsionkit
