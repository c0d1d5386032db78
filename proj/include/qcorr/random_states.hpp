// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "qcorr/axis.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Seeded generator for the state families used by the verification
/// suites. All draws are deterministic for a fixed seed.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  double gaussian();

  /// Uniform over the valid Bell-diagonal correlation region
  /// (rejection from the cube [-1, 1]^3).
  Vec3 bell_coefficients();

  struct XParams {
    Vec3 c{};
    double a3 = 0.0;
    double b3 = 0.0;
  };
  /// Uniform over the valid X-real parameter region.
  XParams x_parameters();

  ClassicalClassicalSpec classical_classical_spec();

  ProjectiveAxis axis();
  std::array<double, 4> unit_quaternion();

  /// Ginibre-distributed random density matrix.
  DensityMatrix4 density();

  Matrix4 hermitian4();
  Matrix2 hermitian2();
  Matrix2 local_unitary();

 private:
  std::mt19937_64 rng_;
};

}  // namespace qcorr
