// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "qcorr/axis.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

/// Two-qubit state in the diagonal-correlation Bloch form: local Bloch
/// vectors a (subsystem A) and b (subsystem B) plus the diagonal
/// correlation coefficients c = (c1, c2, c3).
struct BlochState {
  Vec3 a{};
  Vec3 b{};
  Vec3 c{};
};

/// A validated 4x4 density matrix: Hermitian within 1e-12, unit trace
/// within 1e-12, minimum eigenvalue >= -1e-10.
class DensityMatrix4 {
 public:
  static DensityMatrix4 from_matrix(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }

 private:
  explicit DensityMatrix4(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// A classical joint probability distribution embedded in a pair of
/// orthogonal local bases.
struct ClassicalClassicalSpec {
  std::array<std::array<double, 2>, 2> p{};  // p[i][j] >= 0, sums to 1
  ProjectiveAxis axis_a;
  ProjectiveAxis axis_b;
};

/// Evaluate the Bloch form as a 4x4 matrix:
///   (1 + sum_k c_k s_k x s_k + a.s x 1 + 1 x b.s) / 4.
/// Throws InvalidState (carrying the minimum eigenvalue) when the result
/// is not positive semidefinite within -1e-10.
DensityMatrix4 to_density(const BlochState& s);

/// Eigenvalues of the Bell-diagonal state with correlation triple c, in
/// index order (i,j) = (0,0), (0,1), (1,0), (1,1):
///   lambda_{i,j} = [1 + (-1)^i c1 - (-1)^(i+j) c2 + (-1)^j c3] / 4.
std::array<double, 4> bell_eigenvalues(const Vec3& c);

/// Bell-diagonal state (a = b = 0). Throws InvalidState naming the
/// violated lambda_{i,j} when any eigenvalue is below -1e-10.
BlochState bell_diagonal(const Vec3& c);

/// Eigenvalues of the X-real state, same index order as above:
///   lambda^x_{i,j} = [1 + (-1)^j c3
///                     + (-1)^i sqrt((c1 - (-1)^j c2)^2 + (a3 + (-1)^j b3)^2)] / 4.
std::array<double, 4> x_eigenvalues(const Vec3& c, double a3, double b3);

/// X-real state: a = (0, 0, a3), b = (0, 0, b3). Validated against
/// x_eigenvalues >= -1e-10.
BlochState x_state(const Vec3& c, double a3, double b3);

/// Mixture sum_{i,j} p[i][j] Pi_i^A x Pi_j^B of the four product
/// projectors built from the two axes. Always a valid density matrix.
DensityMatrix4 classical_classical(const ClassicalClassicalSpec& spec);

/// Local Bloch vector of the requested subsystem (a for A, b for B).
Vec3 reduced_bloch(const BlochState& s, Subsystem subsystem);

/// Full Bloch decomposition of an arbitrary two-qubit density matrix:
/// a_k = <s_k x 1>, b_k = <1 x s_k>, t[k][l] = <s_k x s_l>.
struct BlochForm {
  Vec3 a{};
  Vec3 b{};
  std::array<Vec3, 3> t{};
};

BlochForm bloch_decompose(const DensityMatrix4& rho);

}  // namespace qcorr
