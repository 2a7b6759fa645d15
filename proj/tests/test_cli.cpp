// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the qetlab executable. The binary path arrives in
// the QETLAB_BIN environment variable (set by the ctest harness).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

std::string binary_path() {
  const char* bin = std::getenv("QETLAB_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

std::string temp_path(const char* tag) {
  static int counter = 0;
  std::ostringstream out;
  out << "/tmp/qetlab_cli_" << ::getpid() << "_" << counter++ << "_" << tag;
  return out.str();
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string capture = temp_path("capture");
  std::string command;
  if (!env_prefix.empty()) {
    command = "env " + env_prefix + " ";
  }
  command += "\"" + binary_path() + "\" " + args + " >" + capture + " 2>&1";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(capture);
  std::remove(capture.c_str());
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> csv_row_values(const std::string& line) {
  std::vector<double> values;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) values.push_back(std::stod(cell));
  return values;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("certify --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 1);                 // missing subcommand
  CHECK(run_cli("teleport").exit_code == 1);         // unknown subcommand
  CHECK(run_cli("certify --bogus 1").exit_code == 1);
  CHECK(run_cli("run --model nonsense").exit_code == 1);
  CHECK(run_cli("run --format xml").exit_code == 1);
}

TEST_CASE("certify: certified product state") {
  const CliResult res = run_cli(
      "certify --model flipflop --state 00 --post-measurement --format json");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "certify");
  CHECK(j["state"] == "00");
  CHECK(j["post_measurement"] == true);
  CHECK(j["slp_verdict"] == true);
  CHECK(j["indeterminate"] == false);
  CHECK(near(j["m_eigenvalue_0"].get<double>(), 0.0, 1e-6));
  CHECK(near(j["m_eigenvalue_1"].get<double>(), 0.0, 1e-6));
  CHECK(near(j["m_eigenvalue_2"].get<double>(), 0.0, 1e-6));
  CHECK(near(j["m_eigenvalue_3"].get<double>(), 2.0, 1e-6));
  CHECK(near(j["oracle_min_delta_e"].get<double>(), 0.0, 1e-4));
}

TEST_CASE("certify: ground state of the deep-strong regime is not passive") {
  const CliResult res = run_cli(
      "certify --model flipflop --state ground --post-measurement "
      "--format json");
  REQUIRE(res.exit_code == 0);  // determinate negative verdict
  const json j = json::parse(res.output);
  CHECK(j["slp_verdict"] == false);
  CHECK(j["indeterminate"] == false);
  CHECK(near(j["m_eigenvalue_0"].get<double>(), -0.5, 1e-6));
  CHECK(near(j["m_eigenvalue_1"].get<double>(), 0.0, 1e-6));
  CHECK(near(j["m_eigenvalue_2"].get<double>(), 1.5, 1e-6));
  CHECK(near(j["m_eigenvalue_3"].get<double>(), 2.0, 1e-6));
  CHECK(j["agreement"] == true);
}

TEST_CASE("certify: family v2 state") {
  const CliResult res = run_cli(
      "certify --model appendix_b --alpha 0.3 --beta 0.2 --E 2 --F 1 "
      "--state v2 --format json");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["slp_verdict"] == true);
  CHECK(j["model"] == "appendix_b");
}

TEST_CASE("certify: indeterminate margin exits 3 but still reports") {
  const std::string out = temp_path("indeterminate.csv");
  const CliResult res = run_cli(
      "certify --model flipflop --h 1e-6 --kappa 1.5 --state eigenstate-2 "
      "--out " + out);
  CHECK(res.exit_code == 3);
  const std::string payload = read_file(out);
  std::remove(out.c_str());
  REQUIRE(!payload.empty());
  const std::vector<std::string> lines = lines_of(payload);
  CHECK(lines[0] == "# schema_version=1");
  // The scalar CSV is header row + value row (plus the schema comment).
  REQUIRE(lines.size() >= 3);
  CHECK(lines[1].find("indeterminate") != std::string::npos);
  CHECK(lines[2].find("true") != std::string::npos);
}

TEST_CASE("certify: state selector validation") {
  CHECK(run_cli("certify --model flipflop --state v2").exit_code == 1);
  CHECK(run_cli("certify --model flipflop --state eigenstate-9").exit_code ==
        1);
  CHECK(run_cli("certify --model flipflop --state bogus").exit_code == 1);
  // Degenerate ground state: numerical-domain usage error.
  CHECK(run_cli("certify --model flipflop --h 1.5 --kappa 1.5 --state ground")
            .exit_code == 1);
}

TEST_CASE("run: reference extractions") {
  const CliResult flip = run_cli("run --model flipflop --format json");
  REQUIRE(flip.exit_code == 0);
  const json jf = json::parse(flip.output);
  CHECK(near(jf["extracted"].get<double>(), 0.8027756377319946, 1e-9));
  CHECK(near(jf["p_plus"].get<double>(), 0.5, 1e-12));
  CHECK(near(jf["energy_before"].get<double>(), -1.0, 1e-9));
  CHECK(jf["slp_initial_verdict"] == true);
  CHECK(jf["slp_post_measurement_verdict"] == true);

  const CliResult orig = run_cli("run --model original --format json");
  REQUIRE(orig.exit_code == 0);
  const json jo = json::parse(orig.output);
  CHECK(near(jo["extracted"].get<double>(), 0.11142658092961916, 1e-9));

  const CliResult fam = run_cli(
      "run --model appendix_b --alpha 0.3 --beta 0.2 --E 2 --F 1 "
      "--format json");
  REQUIRE(fam.exit_code == 0);
  const json jb = json::parse(fam.output);
  CHECK(near(jb["extracted"].get<double>(), 0.9210609940028851, 1e-6));
}

TEST_CASE("sweep: schema and reference rows") {
  const CliResult res = run_cli("sweep");
  REQUIRE(res.exit_code == 0);
  const std::vector<std::string> lines = lines_of(res.output);
  REQUIRE(lines.size() >= 62);
  CHECK(lines[0] == "# schema_version=1");
  CHECK(lines[1] == "kappa_over_h,e_new,e_orig,ratio");
  // Default grid 0.05..3.0 with 60 points hits 1.5 at row 29.
  const std::vector<double> row = csv_row_values(lines[2 + 29]);
  REQUIRE(row.size() == 4);
  CHECK(near(row[0], 1.5, 1e-9));
  CHECK(near(row[3], 7.20452544657235, 1e-6));
  // Every ratio exceeds 1.
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    CHECK(csv_row_values(lines[i])[3] > 1.0);
  }

  CHECK(run_cli("sweep --kappa-min 2 --kappa-max 1").exit_code == 1);
  CHECK(run_cli("sweep --steps 1").exit_code == 1);
}

TEST_CASE("zeno: schema, decrease, zero time") {
  const CliResult res = run_cli("zeno");
  REQUIRE(res.exit_code == 0);
  const std::vector<std::string> lines = lines_of(res.output);
  CHECK(lines[0] == "# schema_version=1");
  CHECK(lines[1] == "steps,trace_distance");
  REQUIRE(lines.size() == 5);
  const double d0 = csv_row_values(lines[2])[1];
  const double d1 = csv_row_values(lines[3])[1];
  const double d2 = csv_row_values(lines[4])[1];
  CHECK(d0 > d1);
  CHECK(d1 > d2);

  const CliResult zero = run_cli("zeno --t 0 --format json");
  REQUIRE(zero.exit_code == 0);
  const json j = json::parse(zero.output);
  for (const auto& d : j["trace_distance"]) {
    CHECK(d.get<double>() <= 1e-12);
  }

  CHECK(run_cli("zeno --steps 5,3").exit_code == 1);
  CHECK(run_cli("zeno --steps nope").exit_code == 1);
  CHECK(run_cli("zeno --t -1").exit_code == 1);
}

TEST_CASE("circuit: reference rows and mode equivalence") {
  const CliResult res = run_cli("circuit --format json");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["stage"] == "after");
  CHECK(j["mode"] == "dynamic");
  CHECK(near(j["iz_exact"].get<double>(), 0.5547001962252291, 1e-9));
  CHECK(near(j["xx_exact"].get<double>(), -0.8320502943378437, 1e-9));
  CHECK(near(j["yy_exact"].get<double>(), 0.0, 1e-12));
  CHECK(near(j["e_bob_exact"].get<double>(), -1.8027756377319946, 1e-9));
  CHECK(near(j["extracted_exact"].get<double>(), 0.8027756377319946, 1e-9));
  CHECK(near(j["extracted_estimate"].get<double>(),
             j["extracted_exact"].get<double>(), 0.05));
  CHECK(near(j["iz_mean"].get<double>(), j["iz_exact"].get<double>(), 0.02));

  const CliResult before = run_cli("circuit --stage before --format json");
  REQUIRE(before.exit_code == 0);
  const json jb = json::parse(before.output);
  CHECK(near(jb["iz_exact"].get<double>(), 1.0, 1e-12));
  CHECK(near(jb["e_bob_exact"].get<double>(), -1.0, 1e-12));
  CHECK(near(jb["extracted_exact"].get<double>(), 0.8027756377319946, 1e-9));

  const CliResult deferred = run_cli("circuit --mode deferred --format json");
  REQUIRE(deferred.exit_code == 0);
  const json jd = json::parse(deferred.output);
  CHECK(near(jd["iz_exact"].get<double>(), j["iz_exact"].get<double>(),
             1e-12));
  CHECK(near(jd["e_bob_exact"].get<double>(), j["e_bob_exact"].get<double>(),
             1e-12));

  CHECK(run_cli("circuit --model original").exit_code == 1);
  CHECK(run_cli("circuit --shots 0").exit_code == 1);
  CHECK(run_cli("circuit --mode classical").exit_code == 1);
  CHECK(run_cli("circuit --stage during").exit_code == 1);
}

TEST_CASE("reports are byte-identical for identical configurations") {
  const std::string a = temp_path("rep_a.csv");
  const std::string b = temp_path("rep_b.csv");
  REQUIRE(run_cli("circuit --seed 123 --out " + a).exit_code == 0);
  REQUIRE(run_cli("circuit --seed 123 --out " + b).exit_code == 0);
  const std::string pa = read_file(a);
  const std::string pb = read_file(b);
  CHECK(!pa.empty());
  CHECK(pa == pb);

  const std::string c = temp_path("rep_c.csv");
  REQUIRE(run_cli("circuit --seed 124 --out " + c).exit_code == 0);
  CHECK(read_file(c) != pa);
  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove(c.c_str());
}

TEST_CASE("seed precedence: flag > config > environment > default") {
  const std::string by_flag = temp_path("seed_flag.csv");
  const std::string by_env = temp_path("seed_env.csv");
  const std::string env_loses = temp_path("seed_env_loses.csv");
  REQUIRE(run_cli("circuit --seed 123 --out " + by_flag).exit_code == 0);
  REQUIRE(run_cli("circuit --out " + by_env, "QETLAB_SEED=123").exit_code ==
          0);
  CHECK(read_file(by_flag) == read_file(by_env));
  REQUIRE(run_cli("circuit --seed 123 --out " + env_loses,
                  "QETLAB_SEED=999").exit_code == 0);
  CHECK(read_file(by_flag) == read_file(env_loses));
  std::remove(by_flag.c_str());
  std::remove(by_env.c_str());
  std::remove(env_loses.c_str());

  // Unparsable environment seed is a usage error (when actually consulted).
  CHECK(run_cli("circuit", "QETLAB_SEED=notanumber").exit_code == 1);
  // A flag shadows the bad environment value entirely.
  CHECK(run_cli("circuit --seed 5", "QETLAB_SEED=notanumber").exit_code == 0);
}

TEST_CASE("config file: fills defaults, loses to flags, rejects unknown keys") {
  const std::string cfg = temp_path("config.ini");
  {
    std::ofstream out(cfg);
    out << "kappa=2.5\n";
    out << "seed=7\n";
  }
  const CliResult filled =
      run_cli("run --config " + cfg + " --format json");
  REQUIRE(filled.exit_code == 0);
  const json jf = json::parse(filled.output);
  CHECK(near(jf["kappa"].get<double>(), 2.5, 0.0));
  CHECK(jf["seed"].get<std::uint64_t>() == 7);

  const CliResult overridden =
      run_cli("run --config " + cfg + " --kappa 1.7 --format json");
  REQUIRE(overridden.exit_code == 0);
  CHECK(near(json::parse(overridden.output)["kappa"].get<double>(), 1.7,
             0.0));

  // Config beats the environment for the seed.
  const CliResult env_beaten = run_cli(
      "run --config " + cfg + " --format json", "QETLAB_SEED=42");
  REQUIRE(env_beaten.exit_code == 0);
  CHECK(json::parse(env_beaten.output)["seed"].get<std::uint64_t>() == 7);
  std::remove(cfg.c_str());

  const std::string bad_cfg = temp_path("bad_config.ini");
  {
    std::ofstream out(bad_cfg);
    out << "not_a_flag=1\n";
  }
  CHECK(run_cli("run --config " + bad_cfg).exit_code == 1);
  std::remove(bad_cfg.c_str());

  CHECK(run_cli("run --config /nonexistent/qetlab.ini").exit_code == 1);
}

TEST_CASE("output plumbing") {
  // Unwritable output path is a usage error.
  CHECK(run_cli("sweep --out /nonexistent_dir/out.csv").exit_code == 1);

  // Scalar CSV shape: schema comment, header row, value row.
  const CliResult csv = run_cli("run --model flipflop");
  REQUIRE(csv.exit_code == 0);
  const std::vector<std::string> lines = lines_of(csv.output);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "# schema_version=1");
  CHECK(lines[1].rfind("command,model,h,kappa", 0) == 0);
  CHECK(lines[1].find(",warnings") != std::string::npos);
  CHECK(lines[2].rfind("run,flipflop,", 0) == 0);

  // JSON schema version is the string "1".
  const CliResult js = run_cli("sweep --format json");
  REQUIRE(js.exit_code == 0);
  const json j = json::parse(js.output);
  CHECK(j["schema_version"] == "1");
  CHECK(j["kappa_over_h"].size() == 60);
}
