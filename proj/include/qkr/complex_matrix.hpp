// Copyright 2026 The qkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKR_COMPLEX_MATRIX_HPP
#define QKR_COMPLEX_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkr {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major. Everything in the simulator is
/// at most 27x27, so there is no sparse path and no BLAS dependency.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
  }

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), a_(std::move(entries)) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
    if (a_.size() != dim * dim)
      throw std::invalid_argument("ComplexMatrix: entry count must equal dim^2");
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::vector<Complex> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  const std::vector<Complex>& entries() const { return a_; }

  bool all_finite() const {
    for (const Complex& z : a_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o, "operator+=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o, "operator-=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

 private:
  void require_same_dim(const ComplexMatrix& o, const char* op) const {
    if (dim_ != o.dim_)
      throw std::invalid_argument(std::string("ComplexMatrix: dimension mismatch in ") + op);
  }

  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

/// Column vector of complex amplitudes.
class ComplexVector {
 public:
  explicit ComplexVector(std::size_t dim) : a_(dim) {
    if (dim == 0) throw std::invalid_argument("ComplexVector: dim must be positive");
  }

  explicit ComplexVector(std::vector<Complex> entries) : a_(std::move(entries)) {
    if (a_.empty()) throw std::invalid_argument("ComplexVector: dim must be positive");
  }

  std::size_t dim() const { return a_.size(); }
  Complex& operator[](std::size_t i) { return a_[i]; }
  const Complex& operator[](std::size_t i) const { return a_[i]; }

 private:
  std::vector<Complex> a_;
};

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

/// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(j, i) = std::conj(a(i, j));
  return d;
}

/// Kronecker product; entry ((i*bn+k),(j*bn+l)) = a(i,j)*b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t an = a.dim(), bn = b.dim();
  ComplexMatrix c(an * bn);
  for (std::size_t i = 0; i < an; ++i)
    for (std::size_t j = 0; j < an; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < bn; ++k)
        for (std::size_t l = 0; l < bn; ++l)
          c(i * bn + k, j * bn + l) = aij * b(k, l);
    }
  return c;
}

inline Complex trace(const ComplexMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// Outer product |v><v|.
inline ComplexMatrix projector(const ComplexVector& v) {
  const std::size_t n = v.dim();
  ComplexMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

/// max_ij |a(i,j) - b(i,j)|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTol) {
  return max_abs_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.dim())) <= tol;
}

namespace detail {

// Attempts a Cholesky factorization of a Hermitian matrix. Returns false as
// soon as a pivot drops below -pivot_tol; a slightly negative pivot within
// pivot_tol is clamped to zero so that exactly-singular inputs pass.
inline bool cholesky_succeeds(ComplexMatrix h, double pivot_tol) {
  const std::size_t n = h.dim();
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(h(j, k));
    if (d < -pivot_tol) return false;
    const double ljj = std::sqrt(std::max(d, 0.0));
    h(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= h(i, k) * std::conj(h(j, k));
      h(i, j) = (ljj > 0.0) ? s / ljj : Complex(0.0);
    }
  }
  return true;
}

}  // namespace detail

/// True iff a is Hermitian within tol and its Hermitian part has smallest
/// eigenvalue >= -tol. The eigenvalue bound is checked by a shifted Cholesky
/// factorization of (a + a^dagger)/2 + tol*I.
inline bool is_hermitian_psd(const ComplexMatrix& a, double tol = kDefaultTol) {
  const std::size_t n = a.dim();
  double herm_dev = 0.0;
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      herm_dev = std::max(herm_dev, std::abs(a(i, j) - std::conj(a(j, i))));
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  if (herm_dev > tol) return false;
  double scale = std::max(1.0, max_abs(h));
  for (std::size_t i = 0; i < n; ++i) h(i, i) += tol;
  return detail::cholesky_succeeds(h, 64.0 * scale * 1e-16);
}

}  // namespace qkr

#endif  // QKR_COMPLEX_MATRIX_HPP
