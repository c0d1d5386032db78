// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Thrown when a state fails positivity or normalization checks.
/// Carries the offending minimum eigenvalue when the failure is a
/// positivity violation.
class InvalidState : public std::runtime_error {
 public:
  explicit InvalidState(const std::string& what)
      : std::runtime_error(what) {}
  InvalidState(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_ = 0.0;
};

/// Thrown when a numeric optimum is inconsistent (e.g. a discord value
/// below the float-noise window), signalling insufficient optimization.
class OptimizerFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcorr
