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

#include "wwk/readout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace wwk {

namespace {

// Squared magnitude of an outcome's overlap with a path state below this
// marks the outcome as unreachable from that path.
constexpr double kUnreachable = 1e-14;

void check_same_dim(const DetectorPair& pair, const ReadoutBasis& basis) {
  if (pair.dim() != basis.dim()) {
    throw DimensionMismatch("readout: pair and basis dimensions differ");
  }
}

}  // namespace

ReadoutBasis ReadoutBasis::make(Matrix vectors,
                                std::vector<std::string> labels) {
  if (vectors.rows() != vectors.cols() || vectors.rows() == 0) {
    throw InvalidInput("ReadoutBasis: need a square, nonempty vector set");
  }
  if (!vectors.allFinite()) {
    throw InvalidInput("ReadoutBasis: non-finite entry");
  }
  if (static_cast<Index>(labels.size()) != vectors.cols()) {
    throw InvalidInput("ReadoutBasis: one label per vector required");
  }
  const Matrix gram = vectors.adjoint() * vectors;
  const double dev =
      (gram - Matrix::Identity(vectors.cols(), vectors.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (dev > kTolIterative) {
    throw InvalidInput("ReadoutBasis: vectors are not orthonormal");
  }
  return ReadoutBasis{std::move(vectors), std::move(labels)};
}

RealVector outcome_probabilities(const DetectorPair& pair,
                                 const ReadoutBasis& basis) {
  check_same_dim(pair, basis);
  const Index n = basis.size();
  RealVector p(n);
  for (Index i = 0; i < n; ++i) {
    const double wa = std::norm(basis.vectors.col(i).dot(pair.chi_a));
    const double wb = std::norm(basis.vectors.col(i).dot(pair.chi_b));
    p(i) = 0.5 * (wa + wb);
  }
  return p;
}

OutcomeStats guess_probabilities(const DetectorPair& pair,
                                 const ReadoutBasis& basis) {
  check_same_dim(pair, basis);
  const Index n = basis.size();
  OutcomeStats stats;
  stats.p.resize(n);
  stats.q.resize(n);
  stats.guess.resize(n);
  for (Index i = 0; i < n; ++i) {
    const double wa = std::norm(basis.vectors.col(i).dot(pair.chi_a));
    const double wb = std::norm(basis.vectors.col(i).dot(pair.chi_b));
    stats.p(i) = 0.5 * (wa + wb);
    if (wa < kUnreachable && wb < kUnreachable) {
      stats.p(i) = 0.0;
      stats.q(i) = 0.5;
      stats.guess[i] = Path::A;
    } else {
      stats.q(i) = std::max(wa, wb) / (wa + wb);
      stats.guess[i] = wa >= wb ? Path::A : Path::B;
    }
  }
  return stats;
}

double likelihood(const DetectorPair& pair, const ReadoutBasis& basis) {
  const OutcomeStats stats = guess_probabilities(pair, basis);
  const double l = stats.p.dot(stats.q);
  return std::clamp(l, 0.5, 1.0);
}

KnowledgeReport knowledge(const DetectorPair& pair,
                          const ReadoutBasis& basis) {
  KnowledgeReport report;
  report.visibility = visibility(pair);
  report.likelihood = likelihood(pair, basis);
  report.knowledge = std::clamp(2.0 * report.likelihood - 1.0, 0.0, 1.0);
  report.duality_slack = 1.0 - report.knowledge * report.knowledge -
                         report.visibility * report.visibility;
  return report;
}

ReadoutBasis canonical_basis(const DetectorPair& pair) {
  const Matrix a = pair.chi_a * pair.chi_a.adjoint() -
                   pair.chi_b * pair.chi_b.adjoint();
  const EigResult eig = hermitian_eig(a);
  const Index n = pair.dim();

  // The difference operator has rank <= 2 with one positive and one
  // negative eigenvalue +-sqrt(1 - V^2); everything else is kernel.
  std::vector<Index> plus, minus, kernel;
  for (Index i = 0; i < n; ++i) {
    if (eig.values(i) > kTolAlgebraic) {
      plus.push_back(i);
    } else if (eig.values(i) < -kTolAlgebraic) {
      minus.push_back(i);
    } else {
      kernel.push_back(i);
    }
  }
  if (plus.size() > 1 || minus.size() > 1) {
    throw Error("canonical_basis: difference operator has rank > 2");
  }

  Matrix vectors(n, n);
  std::vector<std::string> labels;
  Index col = 0;
  if (!plus.empty() && !minus.empty()) {
    vectors.col(col++) = eig.vectors.col(plus.front());
    labels.push_back("E+");
    vectors.col(col++) = eig.vectors.col(minus.front());
    labels.push_back("E-");
  } else {
    // V = 1: both detector states coincide up to phase and nothing
    // distinguishes the paths; the whole basis is kernel.
    for (Index i : plus) kernel.insert(kernel.begin(), i);
    for (Index i : minus) kernel.push_back(i);
  }
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    vectors.col(col++) = eig.vectors.col(kernel[k]);
    labels.push_back("ker" + std::to_string(k));
  }
  return ReadoutBasis::make(std::move(vectors), std::move(labels));
}

RealVector joint_probabilities(const DetectorPair& pair,
                               const ReadoutBasis& basis, double delta) {
  check_same_dim(pair, basis);
  const Complex phase = std::polar(1.0, -delta);
  const Index n = basis.size();
  RealVector p(n);
  for (Index i = 0; i < n; ++i) {
    const Complex amp = 0.5 * (basis.vectors.col(i).dot(pair.chi_a) +
                               phase * basis.vectors.col(i).dot(pair.chi_b));
    p(i) = std::norm(amp);
  }
  return p;
}

double knowledge_at_phase(const DetectorPair& pair, const ReadoutBasis& basis,
                          double delta) {
  const OutcomeStats stats = guess_probabilities(pair, basis);
  const RealVector joint = joint_probabilities(pair, basis, delta);
  const double total = joint.sum();
  if (total <= kUnreachable) {
    throw UndefinedAtPhase(
        "knowledge_at_phase: detection probability vanishes here");
  }
  double gain = 0.0;
  for (Index i = 0; i < joint.size(); ++i) {
    gain += joint(i) * (2.0 * stats.q(i) - 1.0);
  }
  return std::clamp(gain / total, 0.0, 1.0);
}

double crossover_threshold(double visibility) {
  if (!(visibility > 0.0) || !(visibility < 1.0)) {
    throw InvalidInput("crossover_threshold: requires 0 < V < 1");
  }
  return (std::sqrt((1.0 - visibility) / (1.0 + visibility)) - 1.0) /
         visibility;
}

PhaseSweep phase_sweep(const DetectorPair& pair, const ReadoutBasis& basis,
                       Index bins) {
  check_same_dim(pair, basis);
  if (bins < 2) {
    throw InvalidInput("phase_sweep: need at least 2 bins");
  }
  const OutcomeStats stats = guess_probabilities(pair, basis);
  const Index n = basis.size();

  PhaseSweep sweep;
  sweep.deltas.resize(bins);
  sweep.detection.resize(bins);
  sweep.joint.resize(bins, n);
  sweep.k.resize(bins);
  sweep.k_defined.assign(bins, false);
  sweep.labels = basis.labels;

  for (Index r = 0; r < bins; ++r) {
    const double delta = 2.0 * M_PI * static_cast<double>(r) /
                         static_cast<double>(bins);
    sweep.deltas(r) = delta;
    const RealVector joint = joint_probabilities(pair, basis, delta);
    sweep.joint.row(r) = joint.transpose();
    // P column from the overlap formula; the joint columns sum to it up to
    // rounding, which keeps the two routes separately auditable.
    sweep.detection(r) = detection_probability(pair, delta);
    const double total = joint.sum();
    if (total <= kUnreachable) {
      sweep.k(r) = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double gain = 0.0;
    for (Index i = 0; i < n; ++i) {
      gain += joint(i) * (2.0 * stats.q(i) - 1.0);
    }
    sweep.k(r) = std::clamp(gain / total, 0.0, 1.0);
    sweep.k_defined[r] = true;
  }
  return sweep;
}

}  // namespace wwk
