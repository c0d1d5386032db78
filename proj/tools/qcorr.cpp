// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: analyze single two-qubit states, sweep state
// families to CSV, and run the seeded verification suites.
//
// Exit codes: 0 success, 2 usage/parse error, 3 invalid state,
// 4 output I/O error, 5 verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/information.hpp"
#include "qcorr/states.hpp"
#include "qcorr/sweep.hpp"
#include "qcorr/verify.hpp"

namespace {

constexpr int exit_usage = 2;
constexpr int exit_invalid_state = 3;
constexpr int exit_io = 4;
constexpr int exit_verify_failed = 5;

void print_kv(std::ostream& out, const std::string& key, double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  out << key << '=' << buf << '\n';
}

struct StateFlags {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, a3 = 0.0, b3 = 0.0;
};

qcorr::Matrix4 parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read matrix file '" + path + "'");
  std::vector<qcorr::cplx> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), " %lf , %lf", &re, &im) != 2)
      throw std::runtime_error("matrix file line '" + line +
                               "' is not 're,im'");
    entries.emplace_back(re, im);
  }
  if (entries.size() != 16)
    throw std::runtime_error("matrix file must hold 16 're,im' rows, got " +
                             std::to_string(entries.size()));
  qcorr::Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = entries[4 * i + j];
  return m;
}

struct AnalyticState {
  qcorr::Vec3 c{};
  double a3 = 0.0;
  double b3 = 0.0;
  bool bell_diagonal = false;
};

std::optional<AnalyticState> detect_family(const qcorr::DensityMatrix4& rho) {
  const auto f = qcorr::bloch_decompose(rho);
  constexpr double tol = 1e-12;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      if (k != l && std::abs(f.t[k][l]) > tol) return std::nullopt;
  if (std::abs(f.a[0]) > tol || std::abs(f.a[1]) > tol ||
      std::abs(f.b[0]) > tol || std::abs(f.b[1]) > tol)
    return std::nullopt;
  AnalyticState s;
  s.c = {f.t[0][0], f.t[1][1], f.t[2][2]};
  s.a3 = f.a[2];
  s.b3 = f.b[2];
  s.bell_diagonal = std::abs(s.a3) <= tol && std::abs(s.b3) <= tol;
  return s;
}

void print_analytic_block(std::ostream& out, const AnalyticState& s,
                          const std::string& prefix) {
  using namespace qcorr;
  const double i = x_mutual_information(s.c, s.a3, s.b3);
  const double ca = x_classical_analytic(s.c, s.a3, s.b3, Subsystem::A);
  const double cb = x_classical_analytic(s.c, s.a3, s.b3, Subsystem::B);
  const double qa = std::max(0.0, i - ca);
  const double qb = std::max(0.0, i - cb);
  print_kv(out, prefix + "I", i);
  print_kv(out, prefix + "C_A", ca);
  print_kv(out, prefix + "C_B", cb);
  print_kv(out, prefix + "Q_A", qa);
  print_kv(out, prefix + "Q_B", qb);
  print_kv(out, prefix + "D_AB", std::abs(qa - qb));
  if (s.bell_diagonal) {
    const double cs = bell_classical_symmetric_analytic(s.c);
    print_kv(out, prefix + "C_S", cs);
    print_kv(out, prefix + "Q_S", std::max(0.0, i - cs));
  }
}

int run_analyze(const StateFlags& flags, const std::string& matrix_path,
                const std::string& mode) {
  using namespace qcorr;
  DensityMatrix4 rho = matrix_path.empty()
                           ? to_density(x_state({flags.c1, flags.c2, flags.c3},
                                                flags.a3, flags.b3))
                           : DensityMatrix4::from_matrix(
                                 parse_matrix_file(matrix_path));
  const auto family = detect_family(rho);

  if (mode == "analytic") {
    if (!family) {
      std::cerr << "error: analytic mode needs a Bell-diagonal or X-form "
                   "state; use --mode numeric\n";
      return exit_usage;
    }
    print_analytic_block(std::cout, *family, "");
    return 0;
  }

  const CorrelationReport rep = full_report(rho);
  print_kv(std::cout, "I", rep.mutual_information);
  print_kv(std::cout, "C_A", rep.classical_a);
  print_kv(std::cout, "C_B", rep.classical_b);
  print_kv(std::cout, "C_S", rep.classical_symmetric);
  print_kv(std::cout, "Q_A", rep.discord_a);
  print_kv(std::cout, "Q_B", rep.discord_b);
  print_kv(std::cout, "Q_S", rep.symmetric_discord);
  print_kv(std::cout, "D_AB", rep.asymmetry);
  print_kv(std::cout, "axis_A_theta", rep.axis_a.theta());
  print_kv(std::cout, "axis_A_phi", rep.axis_a.phi());
  print_kv(std::cout, "axis_B_theta", rep.axis_b.theta());
  print_kv(std::cout, "axis_B_phi", rep.axis_b.phi());
  print_kv(std::cout, "axis_S_A_theta", rep.axis_s_a.theta());
  print_kv(std::cout, "axis_S_A_phi", rep.axis_s_a.phi());
  print_kv(std::cout, "axis_S_B_theta", rep.axis_s_b.theta());
  print_kv(std::cout, "axis_S_B_phi", rep.axis_s_b.phi());

  if (mode == "both" && rep.analytic) {
    const auto& an = *rep.analytic;
    print_analytic_block(std::cout, *family, "analytic_");
    print_kv(std::cout, "delta_I",
             std::abs(rep.mutual_information - an.mutual_information));
    print_kv(std::cout, "delta_C_A", std::abs(rep.classical_a - an.classical_a));
    print_kv(std::cout, "delta_C_B", std::abs(rep.classical_b - an.classical_b));
    print_kv(std::cout, "delta_Q_A", std::abs(rep.discord_a - an.discord_a));
    print_kv(std::cout, "delta_Q_B", std::abs(rep.discord_b - an.discord_b));
    print_kv(std::cout, "delta_D_AB", std::abs(rep.asymmetry - an.asymmetry));
    if (an.classical_symmetric) {
      print_kv(std::cout, "delta_C_S",
               std::abs(rep.classical_symmetric - *an.classical_symmetric));
      print_kv(std::cout, "delta_Q_S",
               std::abs(rep.symmetric_discord - *an.symmetric_discord));
    }
  }
  return 0;
}

qcorr::VariedParam parse_vary(const std::string& text) {
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
  const auto c2 = c1 == std::string::npos ? std::string::npos
                                          : text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos ||
      c2 == std::string::npos)
    throw qcorr::SweepError("--vary expects name=min:max:steps, got '" + text +
                            "'");
  qcorr::VariedParam v;
  v.name = text.substr(0, eq);
  try {
    std::size_t used = 0;
    const std::string mins = text.substr(eq + 1, c1 - eq - 1);
    v.min = std::stod(mins, &used);
    if (used != mins.size()) throw std::invalid_argument(mins);
    const std::string maxs = text.substr(c1 + 1, c2 - c1 - 1);
    v.max = std::stod(maxs, &used);
    if (used != maxs.size()) throw std::invalid_argument(maxs);
    const std::string steps = text.substr(c2 + 1);
    v.steps = std::stoi(steps, &used);
    if (used != steps.size()) throw std::invalid_argument(steps);
  } catch (const std::exception&) {
    throw qcorr::SweepError("--vary expects name=min:max:steps, got '" + text +
                            "'");
  }
  return v;
}

int run_sweep_cmd(const qcorr::SweepSpec& spec, const std::string& out_path) {
  const auto records = qcorr::run_sweep(spec);
  if (out_path.empty() || out_path == "-") {
    qcorr::render_csv(spec, records, std::cout);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return exit_io;
  }
  qcorr::render_csv(spec, records, out);
  out.flush();
  if (!out) {
    std::cerr << "error: write failed for '" << out_path << "'\n";
    return exit_io;
  }
  return 0;
}

int run_verify_cmd(std::uint64_t seed, int samples) {
  const auto suites = qcorr::run_verification(seed, samples);
  bool ok = true;
  for (const auto& s : suites) {
    std::cout << "suite " << s.name << ": checked=" << s.checked
              << " failures=" << s.failures << '\n';
    for (const auto& note : s.notes) std::cout << "  " << note << '\n';
    ok = ok && s.failures == 0;
  }
  std::cout << "verify: " << (ok ? "PASS" : "FAIL") << " (seed=" << seed
            << ", samples=" << samples << ")\n";
  return ok ? 0 : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classical, quantum-discord, and symmetric-discord correlations of "
      "two-qubit states"};
  app.require_subcommand(1);

  // analyze
  auto* analyze =
      app.add_subcommand("analyze", "Correlation report for one state");
  StateFlags flags;
  std::string matrix_path;
  std::string analyze_mode = "numeric";
  auto* c1_opt = analyze->add_option("--c1", flags.c1, "Correlation <s1 s1>");
  auto* c2_opt = analyze->add_option("--c2", flags.c2, "Correlation <s2 s2>");
  auto* c3_opt = analyze->add_option("--c3", flags.c3, "Correlation <s3 s3>");
  auto* a3_opt = analyze->add_option("--a3", flags.a3, "Local z field on A");
  auto* b3_opt = analyze->add_option("--b3", flags.b3, "Local z field on B");
  auto* matrix_opt = analyze->add_option(
      "--matrix", matrix_path, "Raw 4x4 matrix: 16 're,im' rows, row-major");
  for (auto* opt : {c1_opt, c2_opt, c3_opt, a3_opt, b3_opt})
    matrix_opt->excludes(opt);
  analyze->add_option("--mode", analyze_mode, "analytic|numeric|both")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}));

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate one quantity over a 1-D or 2-D parameter grid");
  std::string family_name = "x_state";
  std::string quantity_name = "D_AB";
  std::string sweep_mode = "analytic";
  std::string out_path = "-";
  std::vector<std::string> vary_texts;
  StateFlags sweep_flags;
  sweep_flags.c1 = 0.6;
  sweep->add_option("--family", family_name, "bell_diagonal|x_state")
      ->check(CLI::IsMember({"bell_diagonal", "x_state"}));
  sweep
      ->add_option("--quantity", quantity_name,
                   "I|C_A|C_B|C_S|Q_A|Q_B|Q_S|D_AB")
      ->check(CLI::IsMember(
          {"I", "C_A", "C_B", "C_S", "Q_A", "Q_B", "Q_S", "D_AB"}));
  sweep->add_option("--mode", sweep_mode, "analytic|numeric")
      ->check(CLI::IsMember({"analytic", "numeric"}));
  auto* s_c1 = sweep->add_option("--c1", sweep_flags.c1, "Fixed c1");
  auto* s_c2 = sweep->add_option("--c2", sweep_flags.c2, "Fixed c2");
  auto* s_c3 = sweep->add_option("--c3", sweep_flags.c3, "Fixed c3");
  auto* s_a3 = sweep->add_option("--a3", sweep_flags.a3, "Fixed a3");
  auto* s_b3 = sweep->add_option("--b3", sweep_flags.b3, "Fixed b3");
  sweep->add_option("--vary", vary_texts,
                    "Swept parameter as name=min:max:steps (one or two)");
  sweep->add_option("--out", out_path, "Output CSV path, '-' for stdout");

  // verify
  auto* verify =
      app.add_subcommand("verify", "Run the seeded verification suites");
  std::uint64_t seed = 42;
  int samples = 100;
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--samples", samples, "Samples per suite")
      ->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (analyze->parsed())
      return run_analyze(flags, matrix_path, analyze_mode);

    if (sweep->parsed()) {
      qcorr::SweepSpec spec;
      spec.family = *qcorr::family_from_string(family_name);
      spec.quantity = *qcorr::quantity_from_string(quantity_name);
      spec.mode = sweep_mode == "analytic" ? qcorr::EvalMode::analytic
                                           : qcorr::EvalMode::numeric;
      if (vary_texts.empty() && spec.family == qcorr::Family::x_state) {
        vary_texts = {"a3=-0.4:0.4:81", "b3=-0.4:0.4:81"};  // asymmetry surface
      }
      for (const auto& text : vary_texts)
        spec.varied.push_back(parse_vary(text));

      const std::pair<const CLI::Option*, std::pair<std::string, double>>
          params[] = {{s_c1, {"c1", sweep_flags.c1}},
                      {s_c2, {"c2", sweep_flags.c2}},
                      {s_c3, {"c3", sweep_flags.c3}},
                      {s_a3, {"a3", sweep_flags.a3}},
                      {s_b3, {"b3", sweep_flags.b3}}};
      for (const auto& [opt, kv] : params) {
        const bool varied =
            std::any_of(spec.varied.begin(), spec.varied.end(),
                        [&](const auto& v) { return v.name == kv.first; });
        if (varied) {
          if (opt->count() > 0)
            throw qcorr::SweepError("parameter '" + kv.first +
                                    "' cannot be both fixed and varied");
          continue;
        }
        if (opt->count() > 0) {
          spec.fixed[kv.first] = kv.second;  // validate_spec vets the name
        } else if (kv.second != 0.0 &&
                   (spec.family == qcorr::Family::x_state ||
                    (kv.first != "a3" && kv.first != "b3"))) {
          spec.fixed[kv.first] = kv.second;
        }
      }
      return run_sweep_cmd(spec, out_path);
    }

    if (verify->parsed()) return run_verify_cmd(seed, samples);
  } catch (const qcorr::InvalidState& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return exit_invalid_state;
  } catch (const qcorr::SweepError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return 0;
}
