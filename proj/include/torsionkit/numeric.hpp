#pragma once

// Small dense complex matrices in binary128 for the numerical oracle.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "torsionkit/quad.hpp"

namespace torsionkit {

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex(0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);

  std::size_t size() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(const Complex& s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, const Complex& s) { return a *= s; }
  friend ComplexMatrix operator*(const Complex& s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// LU with partial pivoting; exactly zero pivots give determinant 0.
Complex determinant(const ComplexMatrix& a);
/// Throws SingularMatrix on a zero pivot.
ComplexMatrix inverse(const ComplexMatrix& a);
/// max row sum of absolute values
Real norm_inf(const ComplexMatrix& a);
/// ||A|| ||A^-1|| in the infinity norm; infinite when singular.
Real condition_number(const ComplexMatrix& a);

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix random_gaussian_matrix(std::size_t n, std::mt19937_64& rng);

}  // namespace torsionkit
