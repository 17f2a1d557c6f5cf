// Copyright 2026 The wwk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "wwk/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_raw(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  RunResult result;
  if (WIFEXITED(status)) {
    result.code = WEXITSTATUS(status);
  }
  result.out = std::move(out);
  return result;
}

std::string binary() {
  const char* bin = std::getenv("WWK_BIN");
  REQUIRE(bin != nullptr);
  return std::string("\"") + bin + "\"";
}

RunResult run_cli(const std::string& args) {
  return run_raw(binary() + " " + args + " 2>/dev/null");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<double> row_values(const std::string& line) {
  std::vector<double> values;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    values.push_back(std::strtod(cell.c_str(), nullptr));
  }
  return values;
}

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("help and parse errors") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("report --help").code == 0);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("report --no-such-flag").code == 2);
  CHECK(run_cli("sweep --preset two-qubit --alpha 1 --beta 1 --bins 1").code ==
        2);
  CHECK(run_cli("verify --suite nonsense").code == 2);
  CHECK(run_cli("verify").code == 2);
}

TEST_CASE("report on the balanced preset") {
  const RunResult natural = run_cli(
      "report --preset two-qubit --alpha 0.7071 --beta 0.7071 "
      "--basis natural");
  REQUIRE(natural.code == 0);
  const auto jn = nlohmann::json::parse(natural.out);
  CHECK(std::abs(jn["visibility"].get<double>() - 0.5) <= 1e-9);
  CHECK(std::abs(jn["knowledge"].get<double>() - 0.5) <= 1e-9);
  CHECK(std::abs(jn["duality_slack"].get<double>() - 0.5) <= 1e-9);
  REQUIRE(jn["outcomes"].size() == 4);
  CHECK(jn["outcomes"][0]["label"] == "0");
  CHECK(std::abs(jn["outcomes"][0]["q"].get<double>() - 0.5) <= 1e-9);
  CHECK(std::abs(jn["outcomes"][1]["q"].get<double>() - 1.0) <= 1e-9);

  const RunResult canonical = run_cli(
      "report --preset two-qubit --alpha 0.7071 --beta 0.7071 "
      "--basis canonical");
  REQUIRE(canonical.code == 0);
  const auto jc = nlohmann::json::parse(canonical.out);
  CHECK(std::abs(jc["knowledge"].get<double>() - 0.8660254037844386) <= 1e-9);
  CHECK(std::abs(jc["duality_slack"].get<double>()) <= 1e-9);
  CHECK(jc["outcomes"][0]["label"] == "E+");
}

TEST_CASE("report accepts the micromaser preset and complex amplitudes") {
  const RunResult maser =
      run_cli("report --preset micromaser --theta 0.78539816339744831");
  REQUIRE(maser.code == 0);
  const auto jm = nlohmann::json::parse(maser.out);
  CHECK(std::abs(jm["visibility"].get<double>() - 0.5) <= 1e-9);

  const RunResult complex_amp = run_cli(
      "report --preset two-qubit --alpha 0,0.6 --beta 0.8 --basis natural");
  REQUIRE(complex_amp.code == 0);
  const auto ja = nlohmann::json::parse(complex_amp.out);
  CHECK(std::abs(ja["visibility"].get<double>() - 0.36) <= 1e-9);
  CHECK(std::abs(ja["knowledge"].get<double>() - 0.64) <= 1e-9);
}

TEST_CASE("report reads state files and rejects bad ones") {
  wwk::Rng rng(211);
  const wwk::DetectorPair pair = wwk::oracle::random_pair(4, rng);
  {
    std::ofstream out("cli_pair.json");
    out << wwk::pair_to_json(pair);
  }
  const RunResult ok = run_cli("report --state cli_pair.json --basis natural");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(std::abs(j["visibility"].get<double>() - wwk::visibility(pair)) <=
        1e-9);
  std::remove("cli_pair.json");

  {
    std::ofstream out("cli_broken.json");
    out << "{not json";
  }
  CHECK(run_cli("report --state cli_broken.json").code == 2);
  std::remove("cli_broken.json");
  CHECK(run_cli("report --state cli_missing.json").code == 2);
}

TEST_CASE("state resolution errors exit with code 2") {
  CHECK(run_cli("report").code == 2);
  CHECK(run_cli("report --preset two-qubit").code == 2);
  CHECK(run_cli("report --preset two-qubit --alpha 0.6").code == 2);
  CHECK(run_cli("report --preset two-qubit --alpha abc --beta 1").code == 2);
  CHECK(run_cli("report --preset two-qubit --alpha 0 --beta 0").code == 2);
  CHECK(run_cli("report --preset micromaser").code == 2);
  CHECK(run_cli("report --preset micromaser --theta 2.0").code == 2);
  CHECK(run_cli("report --preset two-qubit --alpha 1 --beta 0 "
                "--state x.json").code == 2);
}

TEST_CASE("library failures past parsing exit with code 3") {
  wwk::Vector e0 = wwk::Vector::Zero(3);
  e0(0) = 1.0;
  const wwk::DetectorPair fused = wwk::DetectorPair::make(e0, e0);
  {
    std::ofstream out("cli_fused.json");
    out << wwk::pair_to_json(fused);
  }
  CHECK(run_cli("report --state cli_fused.json --basis natural").code == 3);
  std::remove("cli_fused.json");
}

TEST_CASE("sweep tables follow the closed forms") {
  const RunResult natural = run_cli(
      "sweep --preset two-qubit --alpha 0.7071 --beta 0.7071 "
      "--basis natural --bins 8");
  REQUIRE(natural.code == 0);
  const auto lines = lines_of(natural.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "delta_over_pi,P,K,p_0,p_1,p_2,p_3");
  for (int r = 0; r < 8; ++r) {
    const auto row = row_values(lines[static_cast<std::size_t>(r) + 1]);
    REQUIRE(row.size() == 7);
    const double delta = 2.0 * kPi * r / 8.0;
    CHECK(std::abs(row[0] - delta / kPi) <= 1e-12);
    CHECK(std::abs(row[1] - 0.5 * (1.0 + 0.5 * std::cos(delta))) <= 1e-9);
    CHECK(std::abs(row[2] - 0.5 / (1.0 + 0.5 * std::cos(delta))) <= 1e-9);
  }
  // The dark-fringe row rides the ridge K = 1.
  const auto dark = row_values(lines[5]);
  CHECK(std::abs(dark[2] - 1.0) <= 1e-9);

  const RunResult canonical = run_cli(
      "sweep --preset two-qubit --alpha 0.7071 --beta 0.7071 "
      "--basis canonical --bins 8");
  REQUIRE(canonical.code == 0);
  const auto clines = lines_of(canonical.out);
  const double gap = std::sqrt(0.75);
  for (int r = 0; r < 8; ++r) {
    const auto row = row_values(clines[static_cast<std::size_t>(r) + 1]);
    CHECK(std::abs(row[2] - gap) <= 1e-9);
  }
}

TEST_CASE("sweep emits json on request") {
  const RunResult result = run_cli(
      "sweep --preset two-qubit --alpha 0.6 --beta 0.8 --basis natural "
      "--bins 4 --format json");
  REQUIRE(result.code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["labels"] ==
        std::vector<std::string>{"0", "+", "-", "aux0"});
  REQUIRE(j["rows"].size() == 4);
  const double v = 0.36;
  for (int r = 0; r < 4; ++r) {
    const double delta = 2.0 * kPi * r / 4.0;
    CHECK(std::abs(j["rows"][r]["K"].get<double>() -
                   (1.0 - v) / (1.0 + v * std::cos(delta))) <= 1e-9);
  }
}

TEST_CASE("fig2 grid marks where the eraser readout wins") {
  const RunResult result = run_cli("fig2 --v-grid 5 --delta-grid 8");
  REQUIRE(result.code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 1 + 5 * 8);
  CHECK(lines[0] == "delta_over_pi,V,K_N,natural_beats_canonical");
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto row = row_values(lines[r]);
    REQUIRE(row.size() == 4);
    const double delta = row[0] * kPi;
    const double v = row[1];
    CHECK(std::abs(row[2] - (1.0 - v) / (1.0 + v * std::cos(delta))) <=
          1e-9);
    const double gap = std::sqrt(1.0 - v * v);
    if (row[2] > gap + 1e-6) {
      CHECK(row[3] == 1.0);
    } else if (row[2] < gap - 1e-6) {
      CHECK(row[3] == 0.0);
    }
    if (v == 0.0) {
      CHECK(row[3] == 0.0);  // K_N = K_canonical = 1 everywhere
    }
    if (std::abs(row[0] - 1.0) <= 1e-12 && v > 0.0) {
      CHECK(row[3] == 1.0);  // the ridge always beats a strict gap
    }
  }
}

TEST_CASE("verify suites pass at reduced size") {
  const RunResult duality = run_cli("verify --suite duality --trials 25");
  CHECK(duality.code == 0);
  CHECK(duality.out.find("PASS") != std::string::npos);
  CHECK(run_cli("verify --suite natural --trials 25").code == 0);
  CHECK(run_cli("verify --suite optimality --trials 40").code == 0);
  CHECK(run_cli("verify --suite mc --trials 20000").code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::string sweep_cmd =
      "sweep --preset two-qubit --alpha 0.6 --beta 0.8 --basis natural "
      "--bins 16";
  CHECK(run_cli(sweep_cmd).out == run_cli(sweep_cmd).out);

  const std::string verify_cmd = "verify --suite duality --trials 10 --seed 7";
  const std::string first = run_cli(verify_cmd).out;
  CHECK_FALSE(first.empty());
  CHECK(run_cli(verify_cmd).out == first);

  // The seed can come from the environment instead of the flag.
  const RunResult env_seeded = run_raw(
      "WWK_SEED=7 " + binary() +
      " verify --suite duality --trials 10 2>/dev/null");
  CHECK(env_seeded.out == first);

  const std::string fig_cmd = "fig2 --v-grid 4 --delta-grid 6";
  CHECK(run_cli(fig_cmd).out == run_cli(fig_cmd).out);
}
