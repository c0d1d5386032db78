// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "qcorr/axis.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Result of a one-sided projective measurement: outcome probabilities
/// and the normalized conditional states of the unmeasured subsystem.
/// A branch with probability <= 1e-12 is flagged undefined and holds a
/// maximally mixed placeholder; such branches contribute nothing to
/// conditional entropies.
struct MeasurementOutcome {
  std::array<double, 2> probability{};
  std::array<Matrix2, 2> conditional{};
  std::array<bool, 2> defined{};
};

/// Measure the given subsystem along the axis:
///   p_j = Tr(Pi_j rho),  rho_j = Tr_measured(Pi_j rho Pi_j) / p_j.
MeasurementOutcome measure_one_sided(const DensityMatrix4& rho,
                                     Subsystem measured,
                                     const ProjectiveAxis& axis);

/// Probability-weighted entropy sum_j p_j S(rho_j) in bits.
double conditional_entropy(const MeasurementOutcome& outcome);

/// Two-sided local projective-measurement map:
///   sum_{i,j} (Pi_i x Pi_j) rho (Pi_i x Pi_j).
/// The result is diagonal in the product basis of the two axes and
/// trace-preserving.
DensityMatrix4 lpmm(const DensityMatrix4& rho, const ProjectiveAxis& axis_a,
                    const ProjectiveAxis& axis_b);

}  // namespace qcorr
