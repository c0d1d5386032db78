// SPDX-License-Identifier: Apache-2.0
#include "qcorr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "qcorr/discord.hpp"
#include "qcorr/information.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace {

const std::vector<std::string>& family_params(Family f) {
  static const std::vector<std::string> bell{"c1", "c2", "c3"};
  static const std::vector<std::string> x{"c1", "c2", "c3", "a3", "b3"};
  return f == Family::bell_diagonal ? bell : x;
}

bool known_param(Family f, const std::string& name) {
  const auto& params = family_params(f);
  return std::find(params.begin(), params.end(), name) != params.end();
}

double lookup(const std::map<std::string, double>& values,
              const std::string& name) {
  const auto it = values.find(name);
  return it == values.end() ? 0.0 : it->second;
}

bool parameter_is_static_zero(const SweepSpec& spec, const std::string& name) {
  for (const auto& v : spec.varied)
    if (v.name == name) return false;
  return lookup(spec.fixed, name) == 0.0;
}

double evaluate(const SweepSpec& spec,
                const std::map<std::string, double>& values) {
  const Vec3 c{lookup(values, "c1"), lookup(values, "c2"),
               lookup(values, "c3")};
  const double a3 = lookup(values, "a3");
  const double b3 = lookup(values, "b3");

  if (spec.mode == EvalMode::analytic) {
    const double i = x_mutual_information(c, a3, b3);
    switch (spec.quantity) {
      case Quantity::I:
        return i;
      case Quantity::C_A:
        return x_classical_analytic(c, a3, b3, Subsystem::A);
      case Quantity::C_B:
        return x_classical_analytic(c, a3, b3, Subsystem::B);
      case Quantity::Q_A:
        return std::max(0.0,
                        i - x_classical_analytic(c, a3, b3, Subsystem::A));
      case Quantity::Q_B:
        return std::max(0.0,
                        i - x_classical_analytic(c, a3, b3, Subsystem::B));
      case Quantity::C_S:
        return bell_classical_symmetric_analytic(c);
      case Quantity::Q_S:
        return std::max(0.0, i - bell_classical_symmetric_analytic(c));
      case Quantity::D_AB:
        return discord_asymmetry(c, a3, b3);
    }
  }

  const auto rho = to_density(spec.family == Family::bell_diagonal
                                  ? bell_diagonal(c)
                                  : x_state(c, a3, b3));
  switch (spec.quantity) {
    case Quantity::I:
      return mutual_information(rho);
    case Quantity::C_A:
      return classical_one_sided(rho, Subsystem::A).value;
    case Quantity::C_B:
      return classical_one_sided(rho, Subsystem::B).value;
    case Quantity::Q_A:
      return quantum_discord(rho, Subsystem::A);
    case Quantity::Q_B:
      return quantum_discord(rho, Subsystem::B);
    case Quantity::C_S:
      return classical_symmetric(rho).value;
    case Quantity::Q_S:
      return symmetric_discord(rho);
    case Quantity::D_AB:
      return std::abs(quantum_discord(rho, Subsystem::A) -
                      quantum_discord(rho, Subsystem::B));
  }
  return 0.0;  // unreachable
}

std::string format_value(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void validate_spec(const SweepSpec& spec) {
  if (spec.varied.empty() || spec.varied.size() > 2)
    throw SweepError("sweep requires one or two varied parameters");
  for (const auto& v : spec.varied) {
    if (v.steps < 2) throw SweepError("varied parameter '" + v.name +
                                      "' needs at least 2 steps");
    if (!(v.min < v.max))
      throw SweepError("varied parameter '" + v.name +
                       "' needs min < max");
    if (!known_param(spec.family, v.name))
      throw SweepError("parameter '" + v.name +
                       "' is not part of the selected state family");
    if (spec.fixed.count(v.name))
      throw SweepError("parameter '" + v.name +
                       "' cannot be both fixed and varied");
  }
  if (spec.varied.size() == 2 && spec.varied[0].name == spec.varied[1].name)
    throw SweepError("the two varied parameters must differ");
  for (const auto& [name, value] : spec.fixed) {
    (void)value;
    if (!known_param(spec.family, name))
      throw SweepError("parameter '" + name +
                       "' is not part of the selected state family");
  }
  if (spec.mode == EvalMode::analytic && spec.family == Family::x_state &&
      (spec.quantity == Quantity::C_S || spec.quantity == Quantity::Q_S) &&
      !(parameter_is_static_zero(spec, "a3") &&
        parameter_is_static_zero(spec, "b3")))
    throw SweepError(
        "no closed form for C_S/Q_S with local z fields; use numeric mode");
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  validate_spec(spec);

  std::vector<std::vector<double>> grids;
  for (const auto& v : spec.varied) {
    std::vector<double> g(v.steps);
    for (int k = 0; k < v.steps; ++k)
      g[k] = v.min + (v.max - v.min) * k / (v.steps - 1);
    grids.push_back(std::move(g));
  }

  std::vector<SweepRecord> records;
  const std::size_t outer = grids[0].size();
  const std::size_t inner = grids.size() == 2 ? grids[1].size() : 1;
  records.reserve(outer * inner);

  for (std::size_t i = 0; i < outer; ++i)
    for (std::size_t j = 0; j < inner; ++j) {
      SweepRecord rec;
      std::map<std::string, double> values = spec.fixed;
      values[spec.varied[0].name] = grids[0][i];
      rec.params.push_back(grids[0][i]);
      if (grids.size() == 2) {
        values[spec.varied[1].name] = grids[1][j];
        rec.params.push_back(grids[1][j]);
      }
      try {
        rec.value = evaluate(spec, values);
      } catch (const InvalidState&) {
        rec.value.reset();  // unphysical grid point, skip-marked
      }
      records.push_back(std::move(rec));
    }
  return records;
}

void render_csv(const SweepSpec& spec, const std::vector<SweepRecord>& records,
                std::ostream& out) {
  for (const auto& v : spec.varied) out << v.name << ',';
  out << "value\n";
  for (const auto& rec : records) {
    for (double p : rec.params) out << format_value(p) << ',';
    out << (rec.value ? format_value(*rec.value) : std::string("NA")) << '\n';
  }
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::I: return "I";
    case Quantity::C_A: return "C_A";
    case Quantity::C_B: return "C_B";
    case Quantity::C_S: return "C_S";
    case Quantity::Q_A: return "Q_A";
    case Quantity::Q_B: return "Q_B";
    case Quantity::Q_S: return "Q_S";
    case Quantity::D_AB: return "D_AB";
  }
  return "?";
}

std::optional<Quantity> quantity_from_string(const std::string& s) {
  for (Quantity q : {Quantity::I, Quantity::C_A, Quantity::C_B, Quantity::C_S,
                     Quantity::Q_A, Quantity::Q_B, Quantity::Q_S,
                     Quantity::D_AB})
    if (to_string(q) == s) return q;
  return std::nullopt;
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "bell_diagonal") return Family::bell_diagonal;
  if (s == "x_state") return Family::x_state;
  return std::nullopt;
}

}  // namespace qcorr
