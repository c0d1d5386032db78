// SPDX-License-Identifier: Apache-2.0
#include "qcorr/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr double psd_tol = 1e-10;

double sign_pow(int i) { return i == 0 ? 1.0 : -1.0; }

// Most negative entry with its (i, j) label, for error reporting.
struct MinEntry {
  double value;
  int i, j;
};

MinEntry min_entry(const std::array<double, 4>& lam) {
  MinEntry m{lam[0], 0, 0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (lam[2 * i + j] < m.value) m = {lam[2 * i + j], i, j};
  return m;
}

}  // namespace

DensityMatrix4 DensityMatrix4::from_matrix(const Matrix4& m) {
  if (!is_hermitian(m, 1e-12))
    throw InvalidState("density matrix is not Hermitian within 1e-12");
  const cplx tr = m.trace();
  if (std::abs(tr - cplx(1.0)) > 1e-12)
    throw InvalidState("density matrix trace differs from 1 beyond 1e-12");
  const auto eig = hermitian_eigen(m);
  const double min_eig = eig.eigenvalues.front();
  if (min_eig < -psd_tol) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite: minimum eigenvalue "
       << min_eig;
    throw InvalidState(os.str(), min_eig);
  }
  return DensityMatrix4(m);
}

DensityMatrix4 to_density(const BlochState& s) {
  Matrix4 m = kron(pauli(0), pauli(0));
  for (int k = 0; k < 3; ++k) {
    m += s.c[k] * kron(pauli(k + 1), pauli(k + 1));
    m += s.a[k] * kron(pauli(k + 1), pauli(0));
    m += s.b[k] * kron(pauli(0), pauli(k + 1));
  }
  return DensityMatrix4::from_matrix(0.25 * m);
}

std::array<double, 4> bell_eigenvalues(const Vec3& c) {
  std::array<double, 4> lam{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double si = sign_pow(i), sj = sign_pow(j);
      lam[2 * i + j] = 0.25 * (1.0 + si * c[0] - si * sj * c[1] + sj * c[2]);
    }
  return lam;
}

BlochState bell_diagonal(const Vec3& c) {
  const auto lam = bell_eigenvalues(c);
  const auto m = min_entry(lam);
  if (m.value < -psd_tol) {
    std::ostringstream os;
    os << "bell_diagonal: eigenvalue lambda_{" << m.i << "," << m.j << "} = "
       << m.value << " is negative";
    throw InvalidState(os.str(), m.value);
  }
  return BlochState{.a = {}, .b = {}, .c = c};
}

std::array<double, 4> x_eigenvalues(const Vec3& c, double a3, double b3) {
  std::array<double, 4> lam{};
  for (int j = 0; j < 2; ++j) {
    const double sj = sign_pow(j);
    const double root = std::hypot(c[0] - sj * c[1], a3 + sj * b3);
    for (int i = 0; i < 2; ++i)
      lam[2 * i + j] = 0.25 * (1.0 + sj * c[2] + sign_pow(i) * root);
  }
  return lam;
}

BlochState x_state(const Vec3& c, double a3, double b3) {
  const auto lam = x_eigenvalues(c, a3, b3);
  const auto m = min_entry(lam);
  if (m.value < -psd_tol) {
    std::ostringstream os;
    os << "x_state: eigenvalue lambda^x_{" << m.i << "," << m.j << "} = "
       << m.value << " is negative";
    throw InvalidState(os.str(), m.value);
  }
  return BlochState{.a = {0.0, 0.0, a3}, .b = {0.0, 0.0, b3}, .c = c};
}

DensityMatrix4 classical_classical(const ClassicalClassicalSpec& spec) {
  double sum = 0.0;
  for (const auto& row : spec.p)
    for (double p : row) {
      if (p < 0.0)
        throw std::invalid_argument(
            "classical_classical: probabilities must be nonnegative");
      sum += p;
    }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument(
        "classical_classical: probabilities must sum to 1 within 1e-12");

  const auto pa = projectors(spec.axis_a);
  const auto pb = projectors(spec.axis_b);
  Matrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m += spec.p[i][j] * kron(pa[i], pb[j]);
  return DensityMatrix4::from_matrix(m);
}

Vec3 reduced_bloch(const BlochState& s, Subsystem subsystem) {
  return subsystem == Subsystem::A ? s.a : s.b;
}

BlochForm bloch_decompose(const DensityMatrix4& rho) {
  BlochForm f;
  const Matrix4& m = rho.matrix();
  for (int k = 0; k < 3; ++k) {
    f.a[k] = (m * kron(pauli(k + 1), pauli(0))).trace().real();
    f.b[k] = (m * kron(pauli(0), pauli(k + 1))).trace().real();
    for (int l = 0; l < 3; ++l)
      f.t[k][l] = (m * kron(pauli(k + 1), pauli(l + 1))).trace().real();
  }
  return f;
}

}  // namespace qcorr
