// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcorr {

enum class Family { bell_diagonal, x_state };
enum class Quantity { I, C_A, C_B, C_S, Q_A, Q_B, Q_S, D_AB };
enum class EvalMode { analytic, numeric };

/// Malformed sweep specification (a usage error, not a state error).
class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VariedParam {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;  // >= 2, endpoints included
};

struct SweepSpec {
  Family family = Family::x_state;
  std::map<std::string, double> fixed;  // unset parameters default to 0
  std::vector<VariedParam> varied;      // one or two, row-major order
  Quantity quantity = Quantity::D_AB;
  EvalMode mode = EvalMode::analytic;
};

/// One grid point: the varied parameter values plus the quantity, or
/// nothing when the point is not a physical state (emitted as the skip
/// marker in CSV).
struct SweepRecord {
  std::vector<double> params;
  std::optional<double> value;
};

/// Throws SweepError on malformed specs (bad step counts, unknown or
/// overlapping parameters, analytic mode without a closed form).
void validate_spec(const SweepSpec& spec);

/// Evaluate the full grid in row-major order over the varied parameters.
/// Every point yields a record; invalid states are skip-marked, never
/// dropped. Deterministic.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// CSV with a header row (varied names then "value"), 12 significant
/// digits, '.' decimal point, skip marker NA.
void render_csv(const SweepSpec& spec, const std::vector<SweepRecord>& records,
                std::ostream& out);

std::string to_string(Quantity q);
std::optional<Quantity> quantity_from_string(const std::string& s);
std::optional<Family> family_from_string(const std::string& s);

}  // namespace qcorr
