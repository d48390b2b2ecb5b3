#pragma once

// binary128 reals and complex numbers used by every floating-point path.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

namespace torsionkit {

using Real = boost::multiprecision::float128;
using Complex = boost::multiprecision::complex128;

Real pi_real();
/// exp(2*pi*i*exponent/order) in binary128.
Complex unit_root(long order, long exponent);
/// exp(i*theta)
Complex polar_unit(const Real& theta);
/// z^e by repeated squaring; e may be negative.
Complex int_power(const Complex& z, long e);

inline double to_double(const Real& x) { return static_cast<double>(x); }

}  // namespace torsionkit
