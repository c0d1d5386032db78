// SPDX-License-Identifier: Apache-2.0
#include "qcorr/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcorr {

double StateSampler::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng_);
}

double StateSampler::gaussian() {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(rng_);
}

Vec3 StateSampler::bell_coefficients() {
  for (int tries = 0; tries < 100000; ++tries) {
    const Vec3 c{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    const auto lam = bell_eigenvalues(c);
    if (*std::min_element(lam.begin(), lam.end()) >= 0.0) return c;
  }
  throw std::runtime_error("bell_coefficients: rejection sampling failed");
}

StateSampler::XParams StateSampler::x_parameters() {
  for (int tries = 0; tries < 1000000; ++tries) {
    XParams p;
    p.c = {uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    p.a3 = uniform(-1.0, 1.0);
    p.b3 = uniform(-1.0, 1.0);
    const auto lam = x_eigenvalues(p.c, p.a3, p.b3);
    if (*std::min_element(lam.begin(), lam.end()) >= 0.0) return p;
  }
  throw std::runtime_error("x_parameters: rejection sampling failed");
}

ClassicalClassicalSpec StateSampler::classical_classical_spec() {
  ClassicalClassicalSpec spec;
  double sum = 0.0;
  for (auto& row : spec.p)
    for (auto& p : row) {
      p = -std::log(uniform(1e-12, 1.0));  // Dirichlet(1,1,1,1)
      sum += p;
    }
  double partial = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == 1 && j == 1) break;
      spec.p[i][j] /= sum;
      partial += spec.p[i][j];
    }
  spec.p[1][1] = 1.0 - partial;  // exact unit sum
  spec.axis_a = axis();
  spec.axis_b = axis();
  return spec;
}

ProjectiveAxis StateSampler::axis() {
  for (int tries = 0; tries < 1000; ++tries) {
    const Vec3 v{gaussian(), gaussian(), gaussian()};
    if (norm(v) > 1e-6) return ProjectiveAxis::from_vector(v);
  }
  throw std::runtime_error("axis: degenerate direction draws");
}

std::array<double, 4> StateSampler::unit_quaternion() {
  for (int tries = 0; tries < 1000; ++tries) {
    std::array<double, 4> u{gaussian(), gaussian(), gaussian(), gaussian()};
    const double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2] +
                               u[3] * u[3]);
    if (n > 1e-6) {
      for (auto& x : u) x /= n;
      return u;
    }
  }
  throw std::runtime_error("unit_quaternion: degenerate draws");
}

DensityMatrix4 StateSampler::density() {
  Matrix4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = cplx(gaussian(), gaussian());
  Matrix4 rho = g * g.adjoint();
  rho *= cplx(1.0 / rho.trace().real());
  return DensityMatrix4::from_matrix(rho);
}

Matrix4 StateSampler::hermitian4() {
  Matrix4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = cplx(gaussian(), gaussian());
  return 0.5 * (g + g.adjoint());
}

Matrix2 StateSampler::hermitian2() {
  Matrix2 g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g(i, j) = cplx(gaussian(), gaussian());
  return 0.5 * (g + g.adjoint());
}

Matrix2 StateSampler::local_unitary() { return su2_rotation(unit_quaternion()); }

}  // namespace qcorr
