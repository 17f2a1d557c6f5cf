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

#include "wwk/interferometer.hpp"

#include <string>
#include <vector>

namespace wwk {

enum class Path { A, B };

inline const char* to_string(Path p) { return p == Path::A ? "A" : "B"; }

// A complete orthonormal readout basis for the detector, one column per
// outcome.  `make` rejects non-square input and bases whose Gram matrix
// deviates from the identity by more than 1e-10.
struct ReadoutBasis {
  Matrix vectors;
  std::vector<std::string> labels;

  Index dim() const { return vectors.rows(); }
  Index size() const { return vectors.cols(); }

  static ReadoutBasis make(Matrix vectors, std::vector<std::string> labels);
};

// Per-outcome statistics of the guessing game: outcome probability p_i,
// probability q_i that the better path guess is right, and that guess.
// Exact ties guess A; outcomes that can never fire (both path overlaps
// below 1e-14 in squared magnitude) get p = 0, q = 1/2, guess A.
struct OutcomeStats {
  RealVector p;
  RealVector q;
  std::vector<Path> guess;
};

struct KnowledgeReport {
  double visibility = 0.0;
  double likelihood = 0.0;     // in [1/2, 1]
  double knowledge = 0.0;      // 2 likelihood - 1, in [0, 1]
  double duality_slack = 0.0;  // 1 - knowledge^2 - visibility^2
};

// Phase-averaged outcome probabilities p_i = (|<W_i|chi_a>|^2 +
// |<W_i|chi_b>|^2) / 2.
RealVector outcome_probabilities(const DetectorPair& pair,
                                 const ReadoutBasis& basis);

OutcomeStats guess_probabilities(const DetectorPair& pair,
                                 const ReadoutBasis& basis);

// Likelihood of guessing the path right, L = sum_i p_i q_i.
double likelihood(const DetectorPair& pair, const ReadoutBasis& basis);

// Full report: K = 2L - 1 together with the visibility and the slack in
// the duality bound K^2 + V^2 <= 1.
KnowledgeReport knowledge(const DetectorPair& pair, const ReadoutBasis& basis);

// The knowledge-optimal readout basis: eigenvectors of |chi_a><chi_a| -
// |chi_b><chi_b|, ordered [E+, E-, kernel...] and labeled "E+", "E-",
// "ker0", "ker1", ...  The two nonzero eigenvalues are +-sqrt(1 - V^2);
// when V = 1 they collapse into the kernel and every column is labeled
// "ker<i>".  This basis saturates the duality bound: K = sqrt(1 - V^2).
ReadoutBasis canonical_basis(const DetectorPair& pair);

// Joint probabilities of detection at phase delta with readout outcome i,
// p_i(delta) = |<W_i|chi_a> + exp(-i delta) <W_i|chi_b>|^2 / 4.  They sum
// to P(delta) over a complete basis.
RealVector joint_probabilities(const DetectorPair& pair,
                               const ReadoutBasis& basis, double delta);

// Phase-resolved knowledge K(delta): the guessing-game knowledge computed
// from outcome probabilities conditioned on a detection at phase delta.
// Throws UndefinedAtPhase when P(delta) <= 1e-14.
double knowledge_at_phase(const DetectorPair& pair, const ReadoutBasis& basis,
                          double delta);

// Detections at phase delta cost c(delta) relative to a flat unit reward
// for a correct guess; sorting phases by conditional knowledge, the
// break-even cost where an eraser-type readout overtakes the optimal
// phase-insensitive one is cos(delta* ) = (sqrt((1 - V)/(1 + V)) - 1) / V.
// Requires 0 < V < 1 (InvalidInput otherwise).
double crossover_threshold(double visibility);

// Uniform sweep of [0, 2 pi) with `bins` sample points (at least 2).
// K entries where P(delta) vanishes are NaN with k_defined[i] = false.
struct PhaseSweep {
  RealVector deltas;
  RealVector detection;          // P(delta)
  RealMatrix joint;              // bins x outcomes
  RealVector k;                  // K(delta), NaN where undefined
  std::vector<bool> k_defined;
  std::vector<std::string> labels;
};

PhaseSweep phase_sweep(const DetectorPair& pair, const ReadoutBasis& basis,
                       Index bins);

}  // namespace wwk
