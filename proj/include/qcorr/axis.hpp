// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// A single-qubit projective measurement basis, stored as a point on the
/// unit sphere. The angles are the only physical degrees of freedom of a
/// rank-1 projective measurement: the unitary that rotates the
/// computational basis onto the axis carries a two-parameter gauge
/// redundancy (global phase plus rotation about the axis) that never
/// enters any probability.
class ProjectiveAxis {
 public:
  ProjectiveAxis() = default;  // z axis
  ProjectiveAxis(double theta, double phi);

  /// Canonical axis from an arbitrary nonzero direction. The antipode
  /// -v yields the same projector pair with labels swapped, so the
  /// representative is folded into the upper hemisphere (theta <= pi/2,
  /// with phi in [0, pi) on the equator).
  static ProjectiveAxis from_vector(Vec3 v);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  Vec3 unit_vector() const;

  friend bool operator==(const ProjectiveAxis&, const ProjectiveAxis&) =
      default;

 private:
  double theta_ = 0.0;  // [0, pi]
  double phi_ = 0.0;    // [0, 2*pi)
};

/// The projector pair {(1 + v.sigma)/2, (1 - v.sigma)/2} for the axis
/// direction v. Complete, orthogonal, idempotent.
std::array<Matrix2, 2> projectors(const ProjectiveAxis& axis);

/// The measurement direction as a unit vector. Satisfies the operator
/// identity sum_j Pi_j sigma_k Pi_j = v_k (v.sigma) for k = 1, 2, 3.
Vec3 axis_v(const ProjectiveAxis& axis);

/// SU(2) element u0*1 + i*(u1 sigma_x + u2 sigma_y + u3 sigma_z) for a
/// unit quaternion u.
Matrix2 su2_rotation(const std::array<double, 4>& u);

/// Axis direction picked out by conjugating sigma_z with su2_rotation(u):
/// R sigma_z R^dagger = v.sigma. Exposes the u -> v reduction so tests can
/// drive the rotation parameterization directly.
Vec3 rotation_axis_vector(const std::array<double, 4>& u);

}  // namespace qcorr
