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

#include "wwk/io.hpp"
#include "wwk/natural.hpp"
#include "wwk/oracle.hpp"
#include "wwk/presets.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace wwk;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_double(const std::string& text, const char* what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw InvalidInput(std::string(what) + ": cannot parse '" + text + "'");
  }
  if (pos != text.size()) {
    throw InvalidInput(std::string(what) + ": trailing junk in '" + text +
                       "'");
  }
  return value;
}

// Accepts "re" or "re,im".
Complex parse_complex(const std::string& text, const char* what) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    return {parse_double(text, what), 0.0};
  }
  return {parse_double(text.substr(0, comma), what),
          parse_double(text.substr(comma + 1), what)};
}

struct StateOpts {
  std::string preset;
  std::string state_file;
  std::string alpha;
  std::string beta;
  std::string theta;
};

void add_state_options(CLI::App* cmd, StateOpts& opts) {
  cmd->add_option("--preset", opts.preset, "two-qubit or micromaser")
      ->check(CLI::IsMember({"two-qubit", "micromaser"}));
  cmd->add_option("--state", opts.state_file, "JSON detector-state file");
  cmd->add_option("--alpha", opts.alpha,
                  "two-qubit alpha as re or re,im (normalized with beta)");
  cmd->add_option("--beta", opts.beta,
                  "two-qubit beta as re or re,im (normalized with alpha)");
  cmd->add_option("--theta", opts.theta, "micromaser angle in radians");
}

DetectorPair resolve_state(const StateOpts& opts) {
  if (!opts.preset.empty() && !opts.state_file.empty()) {
    throw InvalidInput("give either --preset or --state, not both");
  }
  if (!opts.state_file.empty()) {
    return load_pair(opts.state_file);
  }
  if (opts.preset == "two-qubit") {
    if (opts.alpha.empty() || opts.beta.empty()) {
      throw InvalidInput("preset two-qubit needs --alpha and --beta");
    }
    Complex alpha = parse_complex(opts.alpha, "--alpha");
    Complex beta = parse_complex(opts.beta, "--beta");
    // CLI amplitudes are normalized for the caller, so rounded literals
    // like 0.7071 are accepted.
    const double total = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (total < 1e-12) {
      throw InvalidInput("two-qubit amplitudes are both zero");
    }
    return presets::two_qubit(alpha / total, beta / total);
  }
  if (opts.preset == "micromaser") {
    if (opts.theta.empty()) {
      throw InvalidInput("preset micromaser needs --theta");
    }
    return presets::micromaser(parse_double(opts.theta, "--theta"));
  }
  throw InvalidInput("need a state source: --preset or --state");
}

// "natural" lifts dim-2 pairs onto an ancilla qubit first, because the
// eraser-type construction needs a third dimension.
std::pair<DetectorPair, ReadoutBasis> resolve_basis(
    const DetectorPair& pair, const std::string& selector) {
  if (selector == "canonical") {
    return {pair, canonical_basis(pair)};
  }
  if (selector == "natural") {
    DetectorPair lifted = ensure_dim3(pair);
    ReadoutBasis basis = natural_basis(lifted);
    return {std::move(lifted), std::move(basis)};
  }
  ReadoutBasis basis = load_basis(selector);
  if (basis.dim() != pair.dim()) {
    throw InvalidInput("basis file dimension does not match the state");
  }
  return {pair, std::move(basis)};
}

int cmd_report(const StateOpts& state_opts, const std::string& basis_sel) {
  const DetectorPair input = resolve_state(state_opts);
  const auto [pair, basis] = resolve_basis(input, basis_sel);
  const KnowledgeReport report = knowledge(pair, basis);
  const OutcomeStats stats = guess_probabilities(pair, basis);
  std::cout << report_to_json(report, stats, basis.labels);
  return 0;
}

int cmd_sweep(const StateOpts& state_opts, const std::string& basis_sel,
              Index bins, const std::string& format) {
  const DetectorPair input = resolve_state(state_opts);
  const auto [pair, basis] = resolve_basis(input, basis_sel);
  const PhaseSweep sweep = phase_sweep(pair, basis, bins);
  std::cout << (format == "json" ? sweep_to_json(sweep)
                                 : sweep_to_csv(sweep));
  return 0;
}

int cmd_fig2(int v_grid, int delta_grid) {
  if (v_grid < 2 || delta_grid < 2) {
    throw InvalidInput("fig2: grids need at least 2 points");
  }
  std::string out = "delta_over_pi,V,K_N,natural_beats_canonical\n";
  for (int j = 0; j < v_grid; ++j) {
    const double v = static_cast<double>(j) / static_cast<double>(v_grid);
    const DetectorPair pair =
        presets::two_qubit(std::sqrt(v), std::sqrt(1.0 - v));
    const ReadoutBasis basis = natural_basis(pair);
    const double k_canonical = knowledge(pair, canonical_basis(pair)).knowledge;
    const PhaseSweep sweep = phase_sweep(pair, basis, delta_grid);
    for (Index r = 0; r < sweep.deltas.size(); ++r) {
      out += fmt17(sweep.deltas(r) / M_PI);
      out += "," + fmt17(v);
      out += "," + fmt17(sweep.k(r));
      out += sweep.k(r) > k_canonical ? ",1\n" : ",0\n";
    }
  }
  std::cout << out;
  return 0;
}

bool verify_duality(std::int64_t trials, std::uint64_t seed) {
  Rng rng(seed);
  double max_saturation_dev = 0.0;
  double max_excess = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const Index dim = 3 + static_cast<Index>(t % 6);
    const DetectorPair pair = oracle::random_pair(dim, rng);
    const KnowledgeReport canonical =
        knowledge(pair, canonical_basis(pair));
    max_saturation_dev =
        std::max(max_saturation_dev, std::abs(canonical.duality_slack));

    std::vector<std::string> labels;
    for (Index i = 0; i < dim; ++i) {
      labels.push_back("W" + std::to_string(i));
    }
    const ReadoutBasis random =
        ReadoutBasis::make(random_unitary(dim, rng), std::move(labels));
    max_excess =
        std::max(max_excess, -knowledge(pair, random).duality_slack);
  }
  const bool saturated = max_saturation_dev <= kTolPipeline;
  const bool bounded = max_excess <= kTolPipeline;
  std::printf("duality: %" PRId64
              " pairs, canonical |K^2+V^2-1| max %.3e (%s)\n",
              trials, max_saturation_dev, saturated ? "ok" : "FAIL");
  std::printf("duality: random-basis K^2+V^2-1 max %.3e (%s)\n", max_excess,
              bounded ? "ok" : "FAIL");
  return saturated && bounded;
}

bool verify_natural_suite(std::int64_t trials, std::uint64_t seed) {
  Rng rng(seed);
  std::int64_t failures = 0;
  double max_invariance = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const Index dim = 3 + static_cast<Index>(t % 6);
    const DetectorPair pair = oracle::random_pair(dim, rng);
    const NaturalBasisParams params{2.0 * M_PI * rng.uniform(),
                                    2.0 * M_PI * rng.uniform()};
    const ReadoutBasis basis = natural_basis(pair, params);
    if (!verify_natural(pair, basis).pass()) {
      ++failures;
      continue;
    }
    // The free phases must not show up in the knowledge profile.
    const NaturalBasisParams params2{2.0 * M_PI * rng.uniform(),
                                     2.0 * M_PI * rng.uniform()};
    const ReadoutBasis basis2 = natural_basis(pair, params2);
    for (int r = 0; r < 16; ++r) {
      const double delta = 2.0 * M_PI * static_cast<double>(r) / 16.0;
      max_invariance = std::max(
          max_invariance, std::abs(knowledge_at_phase(pair, basis, delta) -
                                   knowledge_at_phase(pair, basis2, delta)));
    }
  }
  const bool invariant = max_invariance <= kTolIterative;
  std::printf("natural: %" PRId64 " pairs, %" PRId64
              " construction failures (%s)\n",
              trials, failures, failures == 0 ? "ok" : "FAIL");
  std::printf("natural: free-phase K(delta) spread max %.3e (%s)\n",
              max_invariance, invariant ? "ok" : "FAIL");
  return failures == 0 && invariant;
}

bool verify_optimality(std::int64_t trials, std::uint64_t seed) {
  constexpr int kPairs = 20;
  double worst_margin = 1.0;
  Rng rng(seed);
  for (int p = 0; p < kPairs; ++p) {
    const Index dim = 3 + static_cast<Index>(p % 6);
    const DetectorPair pair = oracle::random_pair(dim, rng);
    const oracle::BasisSearchResult result = oracle::random_basis_search(
        pair, static_cast<int>(trials),
        seed + 1000003ULL * static_cast<std::uint64_t>(p + 1));
    worst_margin = std::min(worst_margin, result.margin);
  }
  const bool optimal = worst_margin >= -kTolPipeline;
  std::printf("optimality: %d pairs x %" PRId64
              " bases, min(K_canonical - best K) = %.3e (%s)\n",
              kPairs, trials, worst_margin, optimal ? "ok" : "FAIL");
  return optimal;
}

bool verify_mc(std::int64_t samples, std::uint64_t seed) {
  const DetectorPair pair =
      presets::two_qubit(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  constexpr int kBins = 32;
  bool all_ok = true;
  const auto run = [&](const ReadoutBasis& basis, const char* name) {
    const auto bins = oracle::mc_guessing_game(pair, basis, kBins, samples,
                                               seed);
    // Reference: the event-weighted average of K(delta) over each bin,
    // which is exactly what the estimator converges to.
    const PhaseSweep fine = phase_sweep(pair, basis, 4096);
    double worst_sigma = 0.0;
    for (const auto& bin : bins) {
      if (!bin.defined) {
        continue;
      }
      double weight = 0.0;
      double gain = 0.0;
      for (Index r = 0; r < fine.deltas.size(); ++r) {
        if (fine.k_defined[static_cast<std::size_t>(r)] &&
            std::floor(fine.deltas(r) / (2.0 * M_PI) * kBins) ==
                std::floor(bin.delta_center / (2.0 * M_PI) * kBins)) {
          const double p = fine.joint.row(r).sum();
          weight += p;
          gain += p * fine.k(r);
        }
      }
      const double expected = gain / weight;
      const double spread =
          bin.stderr_k > 0.0
              ? bin.stderr_k
              : 2.0 * std::sqrt(0.25 / static_cast<double>(bin.n));
      worst_sigma =
          std::max(worst_sigma, std::abs(bin.k_hat - expected) / spread);
    }
    const bool ok = worst_sigma <= 5.0;
    std::printf("mc: %s basis, %" PRId64
                " samples, worst bin deviation %.2f sigma (%s)\n",
                name, samples, worst_sigma, ok ? "ok" : "FAIL");
    all_ok = all_ok && ok;
  };
  run(natural_basis(pair), "natural");
  run(canonical_basis(pair), "canonical");
  return all_ok;
}

int cmd_verify(const std::string& suite, std::int64_t trials,
               std::uint64_t seed) {
  bool ok = false;
  if (suite == "duality") {
    ok = verify_duality(trials > 0 ? trials : 1000, seed);
  } else if (suite == "natural") {
    ok = verify_natural_suite(trials > 0 ? trials : 10000, seed);
  } else if (suite == "optimality") {
    ok = verify_optimality(trials > 0 ? trials : 10000, seed);
  } else if (suite == "mc") {
    ok = verify_mc(trials > 0 ? trials : 100000, seed);
  } else {
    throw InvalidInput("unknown suite: " + suite);
  }
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"which-way knowledge in a symmetric two-path interferometer"};
  app.require_subcommand(1);

  StateOpts report_state;
  std::string report_basis = "canonical";
  CLI::App* report = app.add_subcommand(
      "report", "knowledge report for a detector pair and readout basis");
  add_state_options(report, report_state);
  report->add_option("--basis", report_basis,
                     "natural, canonical, or a basis JSON file");

  StateOpts sweep_state;
  std::string sweep_basis = "canonical";
  Index sweep_bins = 64;
  std::string sweep_format = "csv";
  CLI::App* sweep =
      app.add_subcommand("sweep", "phase-resolved knowledge table");
  add_state_options(sweep, sweep_state);
  sweep->add_option("--basis", sweep_basis,
                    "natural, canonical, or a basis JSON file");
  sweep->add_option("--bins", sweep_bins, "phase sample count")
      ->check(CLI::Range(static_cast<Index>(2), static_cast<Index>(1 << 20)));
  sweep->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  int v_grid = 50;
  int delta_grid = 64;
  CLI::App* fig2 = app.add_subcommand(
      "fig2", "long-format grid of natural-basis knowledge over (delta, V)");
  fig2->add_option("--v-grid", v_grid, "visibility grid points (j/k)");
  fig2->add_option("--delta-grid", delta_grid, "phase grid points");

  std::string suite;
  std::int64_t trials = 0;
  std::uint64_t seed = 42;
  CLI::App* verify =
      app.add_subcommand("verify", "randomized self-check suites");
  verify->add_option("--suite", suite, "duality, natural, optimality, or mc")
      ->required()
      ->check(CLI::IsMember({"duality", "natural", "optimality", "mc"}));
  verify->add_option("--trials", trials,
                     "pair/basis/sample count (0 = suite default)");
  verify->add_option("--seed", seed, "random seed")->envname("WWK_SEED");

  try {
    app.parse(argc, argv);
    if (report->parsed()) {
      return cmd_report(report_state, report_basis);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_state, sweep_basis, sweep_bins, sweep_format);
    }
    if (fig2->parsed()) {
      return cmd_fig2(v_grid, delta_grid);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, trials, seed);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
