// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "qcorr/axis.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Outcome of a measurement-axis optimization. The reported axes
/// reproduce the value when re-evaluated; ties between equally good
/// axes are broken toward the lexicographically smallest (theta, phi).
struct OptimizationResult {
  double value = 0.0;
  std::vector<ProjectiveAxis> axes;  // one axis, or {axis_A, axis_B}
  long evaluations = 0;
  bool converged = false;
};

/// Classical correlation under one-sided projective measurement:
///   C_Y = S(rho_X) - min over axes of sum_j p_j S(rho_j^X),
/// with Y the measured subsystem and X the other one. Deterministic
/// coarse-grid scan plus Nelder-Mead refinement.
OptimizationResult classical_one_sided(const DensityMatrix4& rho,
                                       Subsystem measured);

/// Quantum discord Q_Y = I - C_Y, clamped to 0 inside the float-noise
/// window [-1e-8, 0); any lower value raises OptimizerFailure.
double quantum_discord(const DensityMatrix4& rho, Subsystem measured);

/// Symmetric classical correlation: the maximum mutual information left
/// after complete projective measurements on both sides.
OptimizationResult classical_symmetric(const DensityMatrix4& rho);

/// Symmetric discord Q_S = I - C_S, clamped like quantum_discord.
double symmetric_discord(const DensityMatrix4& rho);

/// Closed form for the symmetric classical correlation of a
/// Bell-diagonal state:
///   sum_i [(1 + (-1)^i kappa)/2] log2[1 + (-1)^i kappa],
/// kappa = max(|c1|, |c2|, |c3|). Equals 1 - h((1 + kappa)/2).
double bell_classical_symmetric_analytic(const Vec3& c);

/// Two-candidate closed form for the one-sided classical correlation of
/// an X-real state: the better of the z-axis branch and the best
/// equatorial branch.
double x_classical_analytic(const Vec3& c, double a3, double b3,
                            Subsystem measured);

/// Discord asymmetry |Q_A - Q_B| of an X-real state, both sides via the
/// closed-form classical correlation.
double discord_asymmetry(const Vec3& c, double a3, double b3);

/// Closed-form values attached to a report when the state matches a
/// known family. C_S/Q_S are only available for Bell-diagonal states.
struct AnalyticReport {
  double mutual_information = 0.0;
  double classical_a = 0.0;
  double classical_b = 0.0;
  double discord_a = 0.0;
  double discord_b = 0.0;
  double asymmetry = 0.0;
  std::optional<double> classical_symmetric;
  std::optional<double> symmetric_discord;
};

/// All correlation quantifiers of one state, computed numerically, with
/// the optimizing axes. Q_A = I - C_A and D_AB = |Q_A - Q_B| hold by
/// construction (up to the >= 0 clamp).
struct CorrelationReport {
  double mutual_information = 0.0;
  double classical_a = 0.0;
  double classical_b = 0.0;
  double classical_symmetric = 0.0;
  double discord_a = 0.0;
  double discord_b = 0.0;
  double symmetric_discord = 0.0;
  double asymmetry = 0.0;
  ProjectiveAxis axis_a;    // optimizer for C_A (measuring A)
  ProjectiveAxis axis_b;    // optimizer for C_B
  ProjectiveAxis axis_s_a;  // two-sided optimizer, side A
  ProjectiveAxis axis_s_b;  // two-sided optimizer, side B
  std::optional<AnalyticReport> analytic;
};

CorrelationReport full_report(const DensityMatrix4& rho);

// Bloch-form evaluation paths used inside the optimizers. They agree
// with the matrix route (measure_one_sided / lpmm + mutual_information)
// to float precision; the matrix route stays the reference.

/// sum_j p_j S(rho_j) for measuring the given subsystem along v.
double one_sided_conditional_entropy(const BlochForm& f, Subsystem measured,
                                     const Vec3& v);

/// Mutual information of the post-measurement state for axes va, vb
/// (equivalently: classical mutual information of the joint outcome
/// distribution).
double lpmm_mutual_information(const BlochForm& f, const Vec3& va,
                               const Vec3& vb);

}  // namespace qcorr
