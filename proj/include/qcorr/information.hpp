// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "qcorr/states.hpp"

namespace qcorr {

/// x * log2(x) with the 0 log 0 = 0 convention.
double xlog2x(double x);

/// Binary entropy h(p) in bits; p is clamped to [0, 1].
double binary_entropy(double p);

/// Shannon entropy -sum x log2 x of a spectrum, in bits. Values inside
/// the float-noise window [-1e-10, 0) clip to 0 (and (1, 1 + 1e-10] to
/// 1); anything further out raises std::invalid_argument.
double entropy_of_spectrum(std::span<const double> spectrum);

/// Von Neumann entropy -Tr(rho log2 rho) of a 2x2 or 4x4 density matrix.
template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& density);

extern template double von_neumann_entropy(const Matrix2&);
extern template double von_neumann_entropy(const Matrix4&);

double von_neumann_entropy(const DensityMatrix4& rho);

/// Total correlation S(rho_A) + S(rho_B) - S(rho_AB), computed via
/// partial traces. Clamped to >= 0.
double mutual_information(const DensityMatrix4& rho);

/// Closed-form mutual information of a Bell-diagonal state:
/// 2 + sum lambda_{i,j} log2 lambda_{i,j}.
double bell_mutual_information(const Vec3& c);

/// Closed-form mutual information of an X-real state, using the reduced
/// entropies h((1 + a3)/2) and h((1 + b3)/2).
double x_mutual_information(const Vec3& c, double a3, double b3);

}  // namespace qcorr
