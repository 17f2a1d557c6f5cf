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

#pragma once

#include "wwk/readout.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace wwk::oracle {

// Random detector pair with independent Haar states on C^dim, redrawn in
// the (measure-zero) event that the overlap magnitude exceeds 1 - 1e-10.
DetectorPair random_pair(Index dim, Rng& rng);

// One bin of the simulated guessing game.
struct GameBin {
  double delta_center = 0.0;
  std::int64_t n = 0;
  std::int64_t n_correct = 0;
  double k_hat = std::numeric_limits<double>::quiet_NaN();
  double stderr_k = std::numeric_limits<double>::quiet_NaN();
  bool defined = false;  // false for empty bins
};

// Monte Carlo guessing game.  Each event samples a joint (outcome, phase)
// pair by inverse CDF over the atoms of a 2^14-point midpoint phase grid,
// then samples the true path from the phase-independent posterior
// P(A | outcome) and scores the basis's fixed per-outcome guess.  Events
// land in `bins` equal phase bins; per bin, k_hat = 2 n_correct / n - 1
// with stderr 2 sqrt(phat (1 - phat) / n).  Deterministic for a given
// (pair, basis, bins, samples, seed): a single sample stream, consumed in
// event order.
std::vector<GameBin> mc_guessing_game(const DetectorPair& pair,
                                      const ReadoutBasis& basis, int bins,
                                      std::int64_t samples,
                                      std::uint64_t seed);

struct BasisSearchResult {
  double best_k = 0.0;
  ReadoutBasis best_basis;
  double k_canonical = 0.0;
  double margin = 0.0;  // k_canonical - best_k
};

// Draws `trials` Haar-random readout bases and reports the best knowledge
// found next to the canonical value.  Work is split over 16 fixed shards
// with per-shard seeds seed + shard_index and merged in shard order, so
// the result is independent of how the shards are scheduled.  Ties keep
// the earliest (shard, trial) hit.
BasisSearchResult random_basis_search(const DetectorPair& pair, int trials,
                                      std::uint64_t seed);

// Residuals of the phase-average consistency identities on a uniform
// `points`-point phase grid (points a power of two, at least 16):
// per outcome |mean_delta p_i(delta) - p_i / 2|, and for the knowledge the
// P-weighted grid average of K(delta) against the phase-averaged K.
struct QuadratureResiduals {
  RealVector per_outcome;
  double k_average = 0.0;

  double max() const {
    double m = k_average;
    for (Index i = 0; i < per_outcome.size(); ++i) {
      m = std::max(m, per_outcome(i));
    }
    return m;
  }
};

QuadratureResiduals quadrature_check(const DetectorPair& pair,
                                     const ReadoutBasis& basis, int points);

}  // namespace wwk::oracle
