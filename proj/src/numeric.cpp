#include "torsionkit/numeric.hpp"

#include <limits>
#include <utility>

namespace torsionkit {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(const Complex& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex& aik = a(i, k);
      if (aik == Complex(0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

namespace {

// In-place LU; returns false on an exactly zero pivot. perm_sign tracks row swaps.
bool lu_decompose(ComplexMatrix& a, std::vector<std::size_t>& perm, int& perm_sign) {
  const std::size_t n = a.size();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  perm_sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    Real best = abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real v = abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0) return false;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(perm[pivot], perm[col]);
      perm_sign = -perm_sign;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a(r, col) / a(col, col);
      a(r, col) = factor;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return true;
}

}  // namespace

Complex determinant(const ComplexMatrix& a) {
  ComplexMatrix lu = a;
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(lu, perm, sign)) return Complex(0);
  Complex det(sign);
  for (std::size_t i = 0; i < lu.size(); ++i) det *= lu(i, i);
  return det;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix lu = a;
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(lu, perm, sign)) throw SingularMatrix("matrix is singular");
  ComplexMatrix inv(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = perm[i] == col ? Complex(1) : Complex(0);
      for (std::size_t k = 0; k < i; ++k) s -= lu(i, k) * x[k];
      x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = x[ii];
      for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * x[k];
      x[ii] = s / lu(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

Real norm_inf(const ComplexMatrix& a) {
  Real best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Real row = 0;
    for (std::size_t j = 0; j < a.size(); ++j) row += abs(a(i, j));
    if (row > best) best = row;
  }
  return best;
}

Real condition_number(const ComplexMatrix& a) {
  try {
    return norm_inf(a) * norm_inf(inverse(a));
  } catch (const SingularMatrix&) {
    return std::numeric_limits<Real>::infinity();
  }
}

ComplexMatrix random_gaussian_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(Real(re), Real(im));
    }
  }
  return m;
}

}  // namespace torsionkit
