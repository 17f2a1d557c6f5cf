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

#include "wwk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

namespace wwk::oracle {

namespace {

constexpr int kPhaseGridBits = 14;
constexpr int kPhaseGrid = 1 << kPhaseGridBits;

}  // namespace

DetectorPair random_pair(Index dim, Rng& rng) {
  if (dim < 2) {
    throw InvalidInput("random_pair: need dim >= 2");
  }
  Vector a = random_state(dim, rng);
  Vector b = random_state(dim, rng);
  while (std::abs(a.dot(b)) > 1.0 - 1e-10) {
    b = random_state(dim, rng);
  }
  return DetectorPair::make(std::move(a), std::move(b));
}

std::vector<GameBin> mc_guessing_game(const DetectorPair& pair,
                                      const ReadoutBasis& basis, int bins,
                                      std::int64_t samples,
                                      std::uint64_t seed) {
  if (pair.dim() != basis.dim()) {
    throw DimensionMismatch("mc_guessing_game: pair and basis differ");
  }
  if (bins < 1 || bins > kPhaseGrid) {
    throw InvalidInput("mc_guessing_game: bins out of range");
  }
  if (samples < 1) {
    throw InvalidInput("mc_guessing_game: need at least one sample");
  }

  const Index n = basis.size();
  const OutcomeStats stats = guess_probabilities(pair, basis);
  std::vector<Complex> amp_a(n), amp_b(n);
  std::vector<double> posterior_a(n);
  for (Index i = 0; i < n; ++i) {
    amp_a[i] = basis.vectors.col(i).dot(pair.chi_a);
    amp_b[i] = basis.vectors.col(i).dot(pair.chi_b);
    const double wa = std::norm(amp_a[i]);
    const double wb = std::norm(amp_b[i]);
    posterior_a[i] = (wa < 1e-14 && wb < 1e-14) ? 0.5 : wa / (wa + wb);
  }

  // The sampled distribution: atoms (phase cell, outcome) weighted by the
  // joint probability at the cell midpoint.
  std::vector<double> cdf(static_cast<std::size_t>(kPhaseGrid) * n);
  double total = 0.0;
  for (int g = 0; g < kPhaseGrid; ++g) {
    const double delta = (static_cast<double>(g) + 0.5) * 2.0 * M_PI /
                         static_cast<double>(kPhaseGrid);
    const Complex phase = std::polar(1.0, -delta);
    for (Index i = 0; i < n; ++i) {
      total += std::norm(0.5 * (amp_a[i] + phase * amp_b[i]));
      cdf[static_cast<std::size_t>(g) * n + i] = total;
    }
  }

  std::vector<std::int64_t> hits(bins, 0), wins(bins, 0);
  Rng rng(seed);
  for (std::int64_t sm = 0; sm < samples; ++sm) {
    const double u = rng.uniform() * total;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const std::size_t atom = std::min(
        static_cast<std::size_t>(std::distance(cdf.begin(), it)),
        cdf.size() - 1);
    const std::int64_t g = static_cast<std::int64_t>(atom / n);
    const Index i = static_cast<Index>(atom % n);
    const Path truth =
        rng.uniform() <= posterior_a[i] ? Path::A : Path::B;
    // Bin of the atom's midpoint phase: floor((g + 1/2) bins / grid).
    const std::int64_t b = (2 * g + 1) * bins / (2 * kPhaseGrid);
    ++hits[b];
    if (stats.guess[i] == truth) {
      ++wins[b];
    }
  }

  std::vector<GameBin> out(bins);
  for (int b = 0; b < bins; ++b) {
    GameBin& bin = out[b];
    bin.delta_center = (static_cast<double>(b) + 0.5) * 2.0 * M_PI /
                       static_cast<double>(bins);
    bin.n = hits[b];
    bin.n_correct = wins[b];
    if (bin.n > 0) {
      const double phat =
          static_cast<double>(bin.n_correct) / static_cast<double>(bin.n);
      bin.k_hat = 2.0 * phat - 1.0;
      bin.stderr_k =
          2.0 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(bin.n));
      bin.defined = true;
    }
  }
  return out;
}

BasisSearchResult random_basis_search(const DetectorPair& pair, int trials,
                                      std::uint64_t seed) {
  if (trials < 1) {
    throw InvalidInput("random_basis_search: need at least one trial");
  }
  constexpr int kShards = 16;
  const Index dim = pair.dim();

  struct ShardBest {
    double k = -1.0;
    Matrix u;
  };
  std::vector<ShardBest> shard_best(kShards);

  const auto run_shard = [&](int s) {
    const int count =
        trials / kShards + (s < trials % kShards ? 1 : 0);
    Rng rng(seed + static_cast<std::uint64_t>(s));
    ShardBest best;
    for (int t = 0; t < count; ++t) {
      Matrix u = random_unitary(dim, rng);
      // K = sum_i max(wa_i, wb_i) - 1, the guessing-game knowledge of the
      // basis made of u's columns.
      double l = 0.0;
      for (Index i = 0; i < dim; ++i) {
        l += std::max(std::norm(u.col(i).dot(pair.chi_a)),
                      std::norm(u.col(i).dot(pair.chi_b)));
      }
      const double k = std::clamp(l - 1.0, 0.0, 1.0);
      if (k > best.k) {
        best.k = k;
        best.u = std::move(u);
      }
    }
    shard_best[s] = std::move(best);
  };

  // Shards carry fixed seeds seed + s and are merged in shard order, so any
  // schedule gives the same result.
  unsigned workers = std::thread::hardware_concurrency();
  workers = std::min<unsigned>(std::max(workers, 1u), kShards);
  if (workers <= 1) {
    for (int s = 0; s < kShards; ++s) {
      run_shard(s);
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int s = static_cast<int>(w); s < kShards;
             s += static_cast<int>(workers)) {
          run_shard(s);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  int winner = -1;
  double best_k = -1.0;
  for (int s = 0; s < kShards; ++s) {
    if (shard_best[s].k > best_k) {
      best_k = shard_best[s].k;
      winner = s;
    }
  }

  std::vector<std::string> labels;
  for (Index i = 0; i < dim; ++i) {
    labels.push_back("W" + std::to_string(i));
  }

  BasisSearchResult result;
  result.best_basis =
      ReadoutBasis::make(std::move(shard_best[winner].u), std::move(labels));
  result.best_k = knowledge(pair, result.best_basis).knowledge;
  result.k_canonical = knowledge(pair, canonical_basis(pair)).knowledge;
  result.margin = result.k_canonical - result.best_k;
  return result;
}

QuadratureResiduals quadrature_check(const DetectorPair& pair,
                                     const ReadoutBasis& basis, int points) {
  if (points < 16 || (points & (points - 1)) != 0) {
    throw InvalidInput("quadrature_check: points must be a power of two >= 16");
  }
  const OutcomeStats stats = guess_probabilities(pair, basis);
  const KnowledgeReport report = knowledge(pair, basis);
  const Index n = basis.size();

  RealVector acc = RealVector::Zero(n);
  double detect_sum = 0.0;
  double gain_sum = 0.0;
  for (int g = 0; g < points; ++g) {
    const double delta =
        2.0 * M_PI * static_cast<double>(g) / static_cast<double>(points);
    const RealVector joint = joint_probabilities(pair, basis, delta);
    acc += joint;
    detect_sum += joint.sum();
    for (Index i = 0; i < n; ++i) {
      gain_sum += joint(i) * (2.0 * stats.q(i) - 1.0);
    }
  }

  QuadratureResiduals residuals;
  residuals.per_outcome.resize(n);
  for (Index i = 0; i < n; ++i) {
    residuals.per_outcome(i) = std::abs(
        acc(i) / static_cast<double>(points) - 0.5 * stats.p(i));
  }
  residuals.k_average = std::abs(gain_sum / detect_sum - report.knowledge);
  return residuals;
}

}  // namespace wwk::oracle
