// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qcorr {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

/// Dense complex square matrix of fixed dimension 2 or 4 with value
/// semantics. Zero-initialized by default.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only 2x2 and 4x4 operators are supported");

 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return e_[i * N + j];
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& v : e_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cplx s, Matrix m) { return m *= s; }
  friend Matrix operator*(double s, Matrix m) { return m *= cplx(s); }
  friend Matrix operator*(Matrix m, cplx s) { return m *= s; }

  Matrix operator*(const Matrix& o) const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::array<cplx, N * N> e_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) {
  return s == Subsystem::A ? Subsystem::B : Subsystem::A;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

/// Pauli operator: k = 0 gives the identity, k = 1..3 give sigma_x,
/// sigma_y, sigma_z. Out-of-range k raises std::invalid_argument.
Matrix2 pauli(int k);

/// Tensor product with subsystem A as the slow (left) index.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Reduced operator of the kept subsystem; preserves the trace.
Matrix2 partial_trace(const Matrix4& rho, Subsystem keep);

template <std::size_t N>
struct EigenDecomposition {
  std::array<double, N> eigenvalues{};  // ascending
  Matrix<N> eigenvectors;               // orthonormal columns, same order
};

/// Full spectral decomposition of a Hermitian matrix via cyclic Jacobi
/// with complex plane rotations. The input must be Hermitian within
/// 1e-10 entrywise; iteration stops once the off-diagonal Frobenius
/// norm drops below 1e-13 (hard cap of 100 sweeps). Deterministic for
/// a fixed input.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const Matrix<N>& m);

extern template EigenDecomposition<2> hermitian_eigen(const Matrix2&);
extern template EigenDecomposition<4> hermitian_eigen(const Matrix4&);

}  // namespace qcorr
