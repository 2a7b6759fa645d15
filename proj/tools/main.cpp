// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// qetlab command-line interface.
//
// Subcommands: certify, run, sweep, circuit, zeno. Reports are written as
// CSV (default) or JSON to --out (stdout when omitted). Exit codes:
//   0 success, 1 usage error, 2 numerical failure, 3 indeterminate
//   certification verdict.
// Option precedence: command-line flags > --config file (key=value lines)
// > QETLAB_SEED (seed only) > built-in defaults.

#include <array>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qetlab/qetlab.hpp"
#include "report.hpp"

namespace {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

std::uint64_t parse_env_seed(const char* text) {
  const std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("QETLAB_SEED is empty");
  }
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) {
    throw std::invalid_argument("QETLAB_SEED must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(value);
}

struct CommonOptions {
  std::string model = "flipflop";
  double h = 1.0;
  double kappa = 1.5;
  double alpha = 0.0;
  double beta = 0.0;
  double big_e = 2.0;
  double big_f = 1.0;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "csv";
  std::string config;
};

qetlab::Model parse_model(const std::string& token) {
  if (token == "original") return qetlab::Model::Original;
  if (token == "flipflop") return qetlab::Model::FlipFlop;
  if (token == "appendix_b") return qetlab::Model::Family;
  throw std::invalid_argument("unknown model: " + token);
}

qetlab::ModelParams to_params(const CommonOptions& opts) {
  qetlab::ModelParams params;
  params.model = parse_model(opts.model);
  params.h = opts.h;
  params.kappa = opts.kappa;
  params.alpha = opts.alpha;
  params.beta = opts.beta;
  params.big_e = opts.big_e;
  params.big_f = opts.big_f;
  return params;
}

void add_model_options(CLI::App* sub, CommonOptions& opts) {
  sub->set_help_flag("--help", "print help and exit");
  sub->add_option("--model", opts.model, "Model: original, flipflop, appendix_b")
      ->check(CLI::IsMember({"original", "flipflop", "appendix_b"}))
      ->capture_default_str();
  sub->add_option("--h", opts.h, "Local field strength h")->capture_default_str();
  sub->add_option("--kappa", opts.kappa, "Coupling strength kappa")
      ->capture_default_str();
  sub->add_option("--alpha", opts.alpha, "appendix_b basis angle alpha")
      ->capture_default_str();
  sub->add_option("--beta", opts.beta, "appendix_b basis angle beta")
      ->capture_default_str();
  sub->add_option("--E", opts.big_e, "appendix_b outer energy level E")
      ->capture_default_str();
  sub->add_option("--F", opts.big_f, "appendix_b inner energy level F")
      ->capture_default_str();
}

void add_output_options(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--out", opts.out, "Output file path (stdout when omitted)");
  sub->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--config", opts.config,
                  "Config file with key=value lines (flags take precedence)");
}

void add_seed_option(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--seed", opts.seed, "Base seed for all pseudorandomness")
      ->capture_default_str();
}

void apply_env_seed(CLI::App* sub, CommonOptions& opts) {
  const CLI::Option* opt = sub->get_option_no_throw("--seed");
  if (opt == nullptr || opt->count() > 0) return;
  if (const char* env = std::getenv("QETLAB_SEED")) {
    opts.seed = parse_env_seed(env);
  }
}

// Feed key=value lines into the parsed subcommand's own options so type
// conversion and validators run exactly as they would for flags.  Keys
// already given on the command line keep their values.
void apply_config(CLI::App* sub, const std::string& path) {
  if (path.empty()) return;
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open config file: " + path);
  }
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const std::string trimmed = CLI::detail::trim_copy(line);
    if (trimmed.empty() || trimmed[0] == '#' || trimmed[0] == ';') continue;
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  " is not key=value: " + trimmed);
    }
    const std::string key = CLI::detail::trim_copy(trimmed.substr(0, eq));
    const std::string value = CLI::detail::trim_copy(trimmed.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  " has an empty key");
    }
    if (key == "config") {
      throw std::invalid_argument(
          "config files cannot set the config key itself");
    }
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw std::invalid_argument("unknown config key: " + key);
    }
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

// Post-parse option resolution for the subcommand that actually ran:
// command-line flags beat config-file values, which beat the QETLAB_SEED
// environment variable (seed only), which beats built-in defaults.
void finalize_options(CLI::App* sub, CommonOptions& opts) {
  if (!sub->parsed()) return;
  apply_config(sub, opts.config);
  apply_env_seed(sub, opts);
}

void write_report(const qetcli::Report& report, const CommonOptions& opts) {
  const std::string payload =
      opts.format == "json" ? report.to_json() : report.to_csv();
  if (opts.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + opts.out);
  }
  file << payload;
  if (!file.good()) {
    throw std::invalid_argument("failed writing output file: " + opts.out);
  }
}

void echo_model(qetcli::Report& report, const CommonOptions& opts) {
  report.add_text("model", opts.model);
  report.add_number("h", opts.h);
  report.add_number("kappa", opts.kappa);
  report.add_number("alpha", opts.alpha);
  report.add_number("beta", opts.beta);
  report.add_number("E", opts.big_e);
  report.add_number("F", opts.big_f);
}

qetlab::ComplexVector select_state(const qetlab::Hamiltonian& hamiltonian,
                                   const std::string& selector) {
  using qetlab::Complex;
  if (selector.empty()) return qetlab::protocol_initial_state(hamiltonian);
  if (selector == "ground") return qetlab::ground_state(hamiltonian);
  if (selector == "00") {
    return {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
            Complex(0.0, 0.0)};
  }
  if (selector == "v2") {
    if (hamiltonian.params.model != qetlab::Model::Family) {
      throw std::invalid_argument(
          "state selector v2 is only defined for --model appendix_b");
    }
    return qetlab::family_basis(hamiltonian.params.alpha,
                                hamiltonian.params.beta)
        .v[1];
  }
  const std::string prefix = "eigenstate-";
  if (selector.rfind(prefix, 0) == 0) {
    const std::string index = selector.substr(prefix.size());
    if (index.size() == 1 && index[0] >= '0' && index[0] <= '3') {
      return qetlab::eig_hermitian(hamiltonian.matrix)
          .eigenvector(static_cast<std::size_t>(index[0] - '0'));
    }
  }
  throw std::invalid_argument(
      "unknown state selector: " + selector +
      " (expected ground, 00, v2, or eigenstate-0..eigenstate-3)");
}

int cmd_certify(const CommonOptions& opts, const std::string& state_selector,
                bool post_measurement) {
  const qetlab::Hamiltonian hamiltonian =
      qetlab::build_hamiltonian(to_params(opts));
  const qetlab::ComplexVector vec = select_state(hamiltonian, state_selector);
  qetlab::DensityMatrix rho = qetlab::DensityMatrix::pure(vec);
  if (post_measurement) {
    rho = qetlab::alice_x_measurement(rho).mixture();
  }

  qetlab::OracleOptions oracle_options;
  oracle_options.seed = opts.seed;
  const qetlab::SlpCertificate certificate =
      qetlab::certify_slp_full(rho.matrix(), hamiltonian.matrix, oracle_options);

  qetcli::Report report;
  report.add_text("command", "certify");
  echo_model(report, opts);
  report.add_text("state",
                  state_selector.empty() ? std::string("default")
                                         : state_selector);
  report.add_boolean("post_measurement", post_measurement);
  report.add_integer("seed", opts.seed);
  for (std::size_t i = 0; i < 4; ++i) {
    report.add_number("m_eigenvalue_" + std::to_string(i),
                      certificate.m_test.m_eigenvalues[i]);
  }
  report.add_number("min_eigenvalue", certificate.m_test.min_eigenvalue);
  report.add_boolean("slp_verdict", certificate.m_test.psd_verdict);
  report.add_boolean("indeterminate", certificate.m_test.indeterminate);
  report.add_number("oracle_min_delta_e", certificate.oracle_min_delta_e);
  report.add_boolean("oracle_stagnated", certificate.oracle_stagnated);
  report.add_nullable("agreement", certificate.agreement);

  if (certificate.m_test.indeterminate) {
    report.add_warning(
        "M-test minimum eigenvalue falls inside the indeterminate band");
  }
  if (certificate.oracle_stagnated) {
    report.add_warning(
        "channel-minimization oracle hit its iteration cap; best value so "
        "far reported");
  }
  write_report(report, opts);
  return certificate.m_test.indeterminate ? 3 : 0;
}

int cmd_run(const CommonOptions& opts) {
  qetlab::ProtocolOptions protocol_options;
  protocol_options.seed = opts.seed;
  const qetlab::ProtocolReport result =
      qetlab::run_protocol(to_params(opts), protocol_options);

  qetcli::Report report;
  report.add_text("command", "run");
  echo_model(report, opts);
  report.add_integer("seed", opts.seed);
  report.add_number("p_plus", result.ensemble.branches[0].probability);
  report.add_number("p_minus", result.ensemble.branches[1].probability);
  report.add_number("energy_before", result.energy_before);
  report.add_number("energy_after", result.energy_after);
  report.add_number("extracted", result.extracted);
  report.add_number("yy_initial", result.yy_expectation_trace[0]);
  report.add_number("yy_post_measurement", result.yy_expectation_trace[1]);
  report.add_number("yy_final", result.yy_expectation_trace[2]);

  const auto add_certificate = [&report](const std::string& prefix,
                                         const qetlab::SlpCertificate& cert) {
    report.add_boolean(prefix + "_verdict", cert.m_test.psd_verdict);
    report.add_boolean(prefix + "_indeterminate", cert.m_test.indeterminate);
    report.add_number(prefix + "_min_eigenvalue", cert.m_test.min_eigenvalue);
    report.add_number(prefix + "_oracle_min_delta_e", cert.oracle_min_delta_e);
    report.add_nullable(prefix + "_agreement", cert.agreement);
  };
  add_certificate("slp_initial", *result.slp_initial);
  add_certificate("slp_post_measurement", *result.slp_post_measurement);

  for (const std::string& warning : result.warnings) {
    report.add_warning(warning);
  }
  write_report(report, opts);
  return 0;
}

int cmd_sweep(const CommonOptions& opts, double kappa_min, double kappa_max,
              int steps) {
  if (!(kappa_min < kappa_max)) {
    throw std::invalid_argument("--kappa-min must be less than --kappa-max");
  }
  if (steps < 2) {
    throw std::invalid_argument("sweep requires --steps >= 2");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid.push_back(kappa_min +
                   (kappa_max - kappa_min) * i / static_cast<double>(steps - 1));
  }
  const std::vector<qetlab::SweepPoint> points =
      qetlab::extraction_ratio_sweep(grid);

  qetcli::Report report;
  report.set_columns({"kappa_over_h", "e_new", "e_orig", "ratio"});
  for (const qetlab::SweepPoint& point : points) {
    report.add_row({point.kappa_over_h, point.e_new, point.e_orig, point.ratio});
    if (!(point.ratio > 1.0)) {
      report.add_warning("ratio is not > 1 at kappa_over_h=" +
                         format_number(point.kappa_over_h));
    }
  }
  write_report(report, opts);
  return 0;
}

int cmd_circuit(const CommonOptions& opts, const std::string& mode,
                const std::string& stage, int shots) {
  if (opts.model != "flipflop") {
    throw std::invalid_argument(
        "the circuit command models the flip-flop protocol only");
  }
  if (shots < 1) {
    throw std::invalid_argument("circuit requires --shots >= 1");
  }
  const qetlab::Circuit circuit =
      mode == "dynamic" ? qetlab::build_dynamic_circuit(opts.h, opts.kappa)
                        : qetlab::build_deferred_circuit(opts.h, opts.kappa);

  const qetlab::ComplexVector zero_zero = {
      qetlab::Complex(1.0, 0.0), qetlab::Complex(0.0, 0.0),
      qetlab::Complex(0.0, 0.0), qetlab::Complex(0.0, 0.0)};
  const qetlab::ComplexMatrix before_state =
      qetlab::DensityMatrix::pure(zero_zero).matrix();
  const qetlab::ComplexMatrix after_state =
      qetlab::simulate(circuit, before_state).final_mixture();

  const std::array<const qetlab::ComplexMatrix*, 2> stages = {&before_state,
                                                              &after_state};
  const std::array<std::string, 3> words = {"IZ", "XX", "YY"};

  std::array<std::array<qetlab::ShotEstimate, 3>, 2> estimates;
  std::array<std::array<double, 3>, 2> exact{};
  std::array<double, 2> e_exact{};
  std::array<qetlab::EnergyEstimate, 2> e_estimate;
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t o = 0; o < 3; ++o) {
      exact[s][o] = qetlab::expectation(*stages[s], words[o]);
      estimates[s][o] =
          qetlab::sample_pauli(*stages[s], words[o], shots,
                               qetlab::derive_seed(opts.seed, 3 * s + o));
    }
    e_exact[s] = qetlab::bob_energy(*stages[s], opts.h, opts.kappa);
    e_estimate[s] = qetlab::bob_energy(estimates[s], opts.h, opts.kappa);
  }

  const std::size_t sel = stage == "before" ? 0 : 1;
  qetcli::Report report;
  report.add_text("command", "circuit");
  report.add_text("model", opts.model);
  report.add_number("h", opts.h);
  report.add_number("kappa", opts.kappa);
  report.add_text("mode", mode);
  report.add_text("stage", stage);
  report.add_integer("shots", static_cast<unsigned long long>(shots));
  report.add_integer("seed", opts.seed);
  for (std::size_t o = 0; o < 3; ++o) {
    std::string name = words[o];
    for (char& c : name) c = static_cast<char>(std::tolower(c));
    report.add_number(name + "_exact", exact[sel][o]);
    report.add_number(name + "_mean", estimates[sel][o].mean);
    report.add_number(name + "_std_error", estimates[sel][o].std_error);
  }
  report.add_number("e_bob_exact", e_exact[sel]);
  report.add_number("e_bob_estimate", e_estimate[sel].value);
  report.add_number("e_bob_std_error", e_estimate[sel].std_error);
  report.add_number("extracted_exact", e_exact[0] - e_exact[1]);
  report.add_number("extracted_estimate",
                    e_estimate[0].value - e_estimate[1].value);
  report.add_number("extracted_std_error",
                    std::sqrt(e_estimate[0].std_error * e_estimate[0].std_error +
                              e_estimate[1].std_error * e_estimate[1].std_error));
  write_report(report, opts);
  return 0;
}

std::vector<int> parse_step_list(const std::string& text) {
  std::vector<int> steps;
  std::string current;
  const auto flush = [&]() {
    if (current.empty()) {
      throw std::invalid_argument("--steps must be a comma-separated list");
    }
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(current, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--steps entries must be integers");
    }
    if (pos != current.size() || value < 1) {
      throw std::invalid_argument("--steps entries must be positive integers");
    }
    if (!steps.empty() && value <= steps.back()) {
      throw std::invalid_argument("--steps must be strictly ascending");
    }
    steps.push_back(value);
    current.clear();
  };
  for (const char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      current += c;
    }
  }
  flush();
  return steps;
}

int cmd_zeno(const CommonOptions& opts, double t,
             const std::string& steps_text) {
  const std::vector<int> steps = parse_step_list(steps_text);
  const qetlab::Hamiltonian hamiltonian =
      qetlab::build_hamiltonian(to_params(opts));
  const qetlab::DensityMatrix exact =
      qetlab::effective_evolution(hamiltonian, '+', t);

  qetcli::Report report;
  report.set_columns({"steps", "trace_distance"});
  for (const int n : steps) {
    const qetlab::DensityMatrix zeno =
        qetlab::zeno_evolve(hamiltonian, '+', t, n);
    report.add_row({static_cast<double>(n), qetlab::trace_distance(zeno, exact)});
  }
  write_report(report, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qetlab: strong local passivity certification and quantum energy "
      "teleportation toolkit"};
  app.require_subcommand(1);
  // The physics flags use the bare coupling names (--h, --kappa, ...), so the
  // short -h help alias must not exist anywhere in the command tree.
  app.set_help_flag("--help", "print help and exit");

  CommonOptions certify_opts;
  std::string certify_state;
  bool certify_post_measurement = false;
  CLI::App* certify = app.add_subcommand(
      "certify", "Certify strong local passivity of a state (M-test + oracle)");
  add_model_options(certify, certify_opts);
  certify->add_option("--state", certify_state,
                      "State selector: ground, 00, v2, eigenstate-0..3 "
                      "(default: the model's protocol initial state)");
  certify->add_flag("--post-measurement", certify_post_measurement,
                    "Certify the dephased state after Alice's X measurement");
  add_seed_option(certify, certify_opts);
  add_output_options(certify, certify_opts);

  CommonOptions run_opts;
  CLI::App* run =
      app.add_subcommand("run", "Run the QET protocol end to end");
  add_model_options(run, run_opts);
  add_seed_option(run, run_opts);
  add_output_options(run, run_opts);

  CommonOptions sweep_opts;
  double kappa_min = 0.05;
  double kappa_max = 3.0;
  int sweep_steps = 60;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Extraction-ratio sweep over kappa/h (h = 1)");
  sweep->set_help_flag("--help", "print help and exit");
  sweep->add_option("--kappa-min", kappa_min, "Lower end of the kappa/h grid")
      ->capture_default_str();
  sweep->add_option("--kappa-max", kappa_max, "Upper end of the kappa/h grid")
      ->capture_default_str();
  sweep->add_option("--steps", sweep_steps, "Number of grid points")
      ->capture_default_str();
  add_output_options(sweep, sweep_opts);

  CommonOptions circuit_opts;
  std::string circuit_mode = "dynamic";
  std::string circuit_stage = "after";
  int circuit_shots = 20000;
  CLI::App* circuit = app.add_subcommand(
      "circuit", "Simulate the flip-flop protocol circuit with shot noise");
  circuit->set_help_flag("--help", "print help and exit");
  circuit
      ->add_option("--model", circuit_opts.model,
                   "Model (the circuit command supports flipflop)")
      ->check(CLI::IsMember({"original", "flipflop", "appendix_b"}))
      ->capture_default_str();
  circuit->add_option("--h", circuit_opts.h, "Local field strength h")
      ->capture_default_str();
  circuit->add_option("--kappa", circuit_opts.kappa, "Coupling strength kappa")
      ->capture_default_str();
  circuit->add_option("--mode", circuit_mode, "Circuit variant")
      ->check(CLI::IsMember({"dynamic", "deferred"}))
      ->capture_default_str();
  circuit->add_option("--stage", circuit_stage, "Observable stage to report")
      ->check(CLI::IsMember({"before", "after"}))
      ->capture_default_str();
  circuit->add_option("--shots", circuit_shots, "Shots per observable")
      ->capture_default_str();
  add_seed_option(circuit, circuit_opts);
  add_output_options(circuit, circuit_opts);

  CommonOptions zeno_opts;
  double zeno_t = 1.0;
  std::string zeno_steps = "100,1000,10000";
  CLI::App* zeno = app.add_subcommand(
      "zeno", "Zeno-pinned evolution vs exact effective dynamics");
  add_model_options(zeno, zeno_opts);
  zeno->add_option("--t", zeno_t, "Total evolution time")->capture_default_str();
  zeno->add_option("--steps", zeno_steps,
                   "Comma-separated ascending step counts")
      ->capture_default_str();
  add_output_options(zeno, zeno_opts);

  try {
    app.parse(argc, argv);
    finalize_options(certify, certify_opts);
    finalize_options(run, run_opts);
    finalize_options(sweep, sweep_opts);
    finalize_options(circuit, circuit_opts);
    finalize_options(zeno, zeno_opts);

    if (certify->parsed()) {
      return cmd_certify(certify_opts, certify_state, certify_post_measurement);
    }
    if (run->parsed()) return cmd_run(run_opts);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_opts, kappa_min, kappa_max, sweep_steps);
    }
    if (circuit->parsed()) {
      return cmd_circuit(circuit_opts, circuit_mode, circuit_stage,
                         circuit_shots);
    }
    if (zeno->parsed()) return cmd_zeno(zeno_opts, zeno_t, zeno_steps);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const qetlab::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
