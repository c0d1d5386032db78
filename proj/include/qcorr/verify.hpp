// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcorr {

struct SuiteResult {
  std::string name;
  int checked = 0;
  int failures = 0;
  std::vector<std::string> notes;
};

/// Run the seeded verification suites: closed-form versus numeric
/// agreement, the zero-symmetric-discord characterization of
/// classical-classical states, mutual-information monotonicity under the
/// measurement map, and the projector/axis operator identity.
std::vector<SuiteResult> run_verification(std::uint64_t seed, int samples);

}  // namespace qcorr
