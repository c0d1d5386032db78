// SPDX-License-Identifier: Apache-2.0
#include "qcorr/measurement.hpp"

#include "qcorr/information.hpp"

namespace qcorr {

namespace {
constexpr double degenerate_tol = 1e-12;
}

MeasurementOutcome measure_one_sided(const DensityMatrix4& rho,
                                     Subsystem measured,
                                     const ProjectiveAxis& axis) {
  const auto pi = projectors(axis);
  const Subsystem kept = other(measured);
  MeasurementOutcome out;
  for (int j = 0; j < 2; ++j) {
    const Matrix4 proj = measured == Subsystem::A
                             ? kron(pi[j], pauli(0))
                             : kron(pauli(0), pi[j]);
    const Matrix4 sandwich = proj * rho.matrix() * proj;
    const Matrix2 reduced = partial_trace(sandwich, kept);
    const double p = reduced.trace().real();
    out.probability[j] = std::max(0.0, p);
    if (p > degenerate_tol) {
      out.conditional[j] = (1.0 / p) * reduced;
      out.defined[j] = true;
    } else {
      out.conditional[j] = 0.5 * Matrix2::identity();
      out.defined[j] = false;
    }
  }
  return out;
}

double conditional_entropy(const MeasurementOutcome& outcome) {
  double s = 0.0;
  for (int j = 0; j < 2; ++j)
    if (outcome.defined[j])
      s += outcome.probability[j] * von_neumann_entropy(outcome.conditional[j]);
  return s;
}

DensityMatrix4 lpmm(const DensityMatrix4& rho, const ProjectiveAxis& axis_a,
                    const ProjectiveAxis& axis_b) {
  const auto pa = projectors(axis_a);
  const auto pb = projectors(axis_b);
  Matrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Matrix4 proj = kron(pa[i], pb[j]);
      m += proj * rho.matrix() * proj;
    }
  return DensityMatrix4::from_matrix(m);
}

}  // namespace qcorr
