// SPDX-License-Identifier: Apache-2.0
#include "qcorr/information.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcorr {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double binary_entropy(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double entropy_of_spectrum(std::span<const double> spectrum) {
  constexpr double clip = 1e-10;
  double s = 0.0;
  for (double v : spectrum) {
    if (v < -clip || v > 1.0 + clip)
      throw std::invalid_argument(
          "entropy_of_spectrum: eigenvalue outside [0, 1] beyond 1e-10");
    s -= xlog2x(std::clamp(v, 0.0, 1.0));
  }
  return s;
}

template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& density) {
  if (!is_hermitian(density, 1e-12))
    throw std::invalid_argument(
        "von_neumann_entropy: matrix is not Hermitian within 1e-12");
  if (std::abs(density.trace() - cplx(1.0)) > 1e-12)
    throw std::invalid_argument(
        "von_neumann_entropy: trace differs from 1 beyond 1e-12");
  const auto eig = hermitian_eigen(density);
  return entropy_of_spectrum(eig.eigenvalues);
}

template double von_neumann_entropy(const Matrix2&);
template double von_neumann_entropy(const Matrix4&);

double von_neumann_entropy(const DensityMatrix4& rho) {
  return entropy_of_spectrum(hermitian_eigen(rho.matrix()).eigenvalues);
}

double mutual_information(const DensityMatrix4& rho) {
  const double sa = von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::A));
  const double sb = von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
  const double sab = von_neumann_entropy(rho);
  return std::max(0.0, sa + sb - sab);
}

double bell_mutual_information(const Vec3& c) {
  const auto lam = bell_eigenvalues(c);
  for (double v : lam)
    if (v < -1e-10)
      throw InvalidState("bell_mutual_information: invalid Bell-diagonal state",
                         v);
  return std::max(0.0, 2.0 - entropy_of_spectrum(lam));
}

double x_mutual_information(const Vec3& c, double a3, double b3) {
  const auto lam = x_eigenvalues(c, a3, b3);
  for (double v : lam)
    if (v < -1e-10)
      throw InvalidState("x_mutual_information: invalid X state", v);
  const double sa = binary_entropy(0.5 * (1.0 + a3));
  const double sb = binary_entropy(0.5 * (1.0 + b3));
  return std::max(0.0, sa + sb - entropy_of_spectrum(lam));
}

}  // namespace qcorr
