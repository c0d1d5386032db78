// SPDX-License-Identifier: Apache-2.0
#include "qcorr/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcorr {

Matrix2 pauli(int k) {
  Matrix2 m;
  switch (k) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = cplx(0.0, -1.0);
      m(1, 0) = cplx(0.0, 1.0);
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: index must be in 0..3");
  }
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Matrix2 partial_trace(const Matrix4& rho, Subsystem keep) {
  Matrix2 r;
  if (keep == Subsystem::A) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        r(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  } else {
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l)
        r(k, l) = rho(k, l) + rho(2 + k, 2 + l);
  }
  return r;
}

namespace {

template <std::size_t N>
double offdiag_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      s += std::norm(a(i, j)) + std::norm(a(j, i));
  return std::sqrt(s);
}

// One complex Jacobi rotation in the (p, q) plane, annihilating a(p, q).
// Applies A <- J^H A J and accumulates the eigenvector product V <- V J.
template <std::size_t N>
void jacobi_rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r < 1e-300) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const cplx phase = apq / r;
  const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * r);
  const double sg = tau >= 0.0 ? 1.0 : -1.0;
  const double t = -sg / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx s = phase * (t * c);

  for (std::size_t k = 0; k < N; ++k) {  // A <- A J (columns p, q)
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c - akq * std::conj(s);
    a(k, q) = akp * s + akq * c;
  }
  for (std::size_t k = 0; k < N; ++k) {  // A <- J^H A (rows p, q)
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = std::conj(s) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c - vkq * std::conj(s);
    v(k, q) = vkp * s + vkq * c;
  }
}

}  // namespace

template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const Matrix<N>& m) {
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument(
        "hermitian_eigen: matrix is not Hermitian within 1e-10");

  Matrix<N> a;
  for (std::size_t i = 0; i < N; ++i)  // symmetrize away float noise
    for (std::size_t j = 0; j < N; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  Matrix<N> v = Matrix<N>::identity();
  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) < 1e-13) break;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(a, v, p, q);
  }

  std::array<std::size_t, N> idx{};
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenDecomposition<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = a(idx[k], idx[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.eigenvectors(r, k) = v(r, idx[k]);
  }
  return out;
}

template EigenDecomposition<2> hermitian_eigen(const Matrix2&);
template EigenDecomposition<4> hermitian_eigen(const Matrix4&);

}  // namespace qcorr
