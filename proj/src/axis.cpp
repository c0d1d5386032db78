// SPDX-License-Identifier: Apache-2.0
#include "qcorr/axis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcorr {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

ProjectiveAxis::ProjectiveAxis(double theta, double phi) {
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  if (theta > std::numbers::pi) {
    theta = two_pi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  theta_ = theta;
  phi_ = phi;
}

ProjectiveAxis ProjectiveAxis::from_vector(Vec3 v) {
  const double n = norm(v);
  if (n < 1e-15)
    throw std::invalid_argument("ProjectiveAxis: zero direction vector");
  for (auto& x : v) x /= n;

  const bool flip =
      v[2] < 0.0 ||
      (v[2] == 0.0 && (v[1] < 0.0 || (v[1] == 0.0 && v[0] < 0.0)));
  if (flip)
    for (auto& x : v) x = -x;

  const double theta = std::acos(std::clamp(v[2], -1.0, 1.0));
  double phi = (v[0] == 0.0 && v[1] == 0.0) ? 0.0 : std::atan2(v[1], v[0]);
  if (phi < 0.0) phi += two_pi;

  ProjectiveAxis axis;
  axis.theta_ = theta;
  axis.phi_ = phi;
  return axis;
}

Vec3 ProjectiveAxis::unit_vector() const {
  const double st = std::sin(theta_);
  return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

std::array<Matrix2, 2> projectors(const ProjectiveAxis& axis) {
  const Vec3 v = axis.unit_vector();
  Matrix2 p0;
  p0(0, 0) = 0.5 * (1.0 + v[2]);
  p0(1, 1) = 0.5 * (1.0 - v[2]);
  p0(0, 1) = 0.5 * cplx(v[0], -v[1]);
  p0(1, 0) = 0.5 * cplx(v[0], v[1]);
  const Matrix2 p1 = Matrix2::identity() - p0;
  return {p0, p1};
}

Vec3 axis_v(const ProjectiveAxis& axis) { return axis.unit_vector(); }

Matrix2 su2_rotation(const std::array<double, 4>& u) {
  Matrix2 r;
  r(0, 0) = cplx(u[0], u[3]);
  r(0, 1) = cplx(u[2], u[1]);
  r(1, 0) = cplx(-u[2], u[1]);
  r(1, 1) = cplx(u[0], -u[3]);
  return r;
}

Vec3 rotation_axis_vector(const std::array<double, 4>& u) {
  return {2.0 * (u[1] * u[3] - u[0] * u[2]),
          2.0 * (u[2] * u[3] + u[0] * u[1]),
          u[0] * u[0] - u[1] * u[1] - u[2] * u[2] + u[3] * u[3]};
}

}  // namespace qcorr
