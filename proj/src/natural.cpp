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

#include "wwk/natural.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wwk {

namespace {

constexpr double kMaxOverlap = 1.0 - 1e-10;

void check_overlap(const DetectorPair& pair) {
  if (visibility(pair) > kMaxOverlap) {
    throw OverlapTooClose(
        "natural: |<chi_a|chi_b>| too close to 1 for the w = sqrt(1 - V) "
        "division");
  }
}

}  // namespace

DetectorPair ensure_dim3(const DetectorPair& pair) {
  if (pair.dim() >= 3) {
    return pair;
  }
  if (pair.dim() < 2) {
    throw InvalidInput(
        "ensure_dim3: a one-dimensional detector records nothing");
  }
  // Attach an ancilla qubit in |0>: chi (x) |0> lives on indices {0, 2}
  // of the four-dimensional product space.
  Vector a = Vector::Zero(4);
  Vector b = Vector::Zero(4);
  a(0) = pair.chi_a(0);
  a(2) = pair.chi_a(1);
  b(0) = pair.chi_b(0);
  b(2) = pair.chi_b(1);
  return DetectorPair::make(std::move(a), std::move(b));
}

Vector ancilla_t(const DetectorPair& pair) {
  if (pair.dim() < 3) {
    throw DimensionMismatch("ancilla_t: need dim >= 3; see ensure_dim3");
  }
  check_overlap(pair);
  Matrix span(pair.dim(), 2);
  span.col(0) = pair.chi_a;
  span.col(1) = pair.chi_b;
  return orthonormal_complement(span, pair.dim()).col(0);
}

ReadoutBasis natural_basis(const DetectorPair& pair,
                           const NaturalBasisParams& params) {
  const Vector t = ancilla_t(pair);  // also enforces the preconditions

  const Complex s = overlap(pair);
  const double vis = std::min(std::abs(s), 1.0);
  const double gamma = std::arg(s);
  const Complex v = std::polar(std::sqrt(vis), params.v_phase);
  const Complex phase_gamma = std::polar(1.0, gamma);
  const double w = std::sqrt(1.0 - vis);
  const Complex x2 = std::polar(1.0, params.eta) *
                     std::sqrt((1.0 - vis) / (1.0 + vis));

  Vector zero = (std::conj(v) / (1.0 + vis)) *
                    (pair.chi_a + std::conj(phase_gamma) * pair.chi_b) +
                x2 * t;
  Vector plus = (pair.chi_a - v * zero) / w;
  Vector minus = (pair.chi_b - v * phase_gamma * zero) / w;
  zero.normalize();
  plus.normalize();
  minus.normalize();

  const Index n = pair.dim();
  Matrix vectors(n, n);
  vectors.col(0) = zero;
  vectors.col(1) = plus;
  vectors.col(2) = minus;
  std::vector<std::string> labels = {"0", "+", "-"};
  if (n > 3) {
    Matrix head(n, 3);
    head << zero, plus, minus;
    const Matrix aux = orthonormal_complement(head, n);
    for (Index j = 0; j < aux.cols(); ++j) {
      vectors.col(3 + j) = aux.col(j);
      labels.push_back("aux" + std::to_string(j));
    }
  }
  return ReadoutBasis::make(std::move(vectors), std::move(labels));
}

NaturalCheck verify_natural(const DetectorPair& pair,
                            const ReadoutBasis& basis) {
  if (pair.dim() != basis.dim()) {
    throw DimensionMismatch("verify_natural: pair and basis dimensions differ");
  }
  NaturalCheck check;

  const Index n = basis.size();
  const Matrix gram = basis.vectors.adjoint() * basis.vectors;
  check.max_gram_deviation =
      (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  check.orthonormal = check.max_gram_deviation <= kTolIterative;

  const Complex s = overlap(pair);
  const double vis = std::min(std::abs(s), 1.0);
  const double gamma = std::arg(s);
  const double root_v = std::sqrt(vis);

  // Classify outcomes by their path overlaps.  Practical bases sit far from
  // the classification boundaries; the strict per-class deviations are what
  // the flags grade.
  int zero_info = 0;
  bool classifiable = true;
  check.max_balance_deviation = 0.0;
  check.max_cross_overlap = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double oa = std::abs(basis.vectors.col(i).dot(pair.chi_a));
    const double ob = std::abs(basis.vectors.col(i).dot(pair.chi_b));
    if (oa <= 1e-7 && ob <= 1e-7) {
      continue;  // unreachable
    }
    if (std::min(oa, ob) <= 1e-6) {
      check.max_cross_overlap =
          std::max(check.max_cross_overlap, std::min(oa, ob));
    } else if (std::abs(oa - ob) <= 1e-6) {
      ++zero_info;
      check.max_balance_deviation =
          std::max({check.max_balance_deviation, std::abs(oa - root_v),
                    std::abs(ob - root_v)});
    } else {
      classifiable = false;
    }
  }
  check.structure = classifiable && zero_info <= 1;
  check.zero_info_balanced = check.max_balance_deviation <= kTolAlgebraic;
  check.full_info_exclusive = check.max_cross_overlap <= kTolAlgebraic;

  // Phase-resolved profile against the closed form
  // (1 - V) / (1 + V cos(delta - gamma)), including the ridge K = 1 at the
  // dark fringe delta = pi + gamma.
  const double delta_min = M_PI + gamma;
  double max_dev = 0.0;
  bool defined_everywhere = true;
  const auto expected = [&](double delta) {
    return (1.0 - vis) / (1.0 + vis * std::cos(delta - gamma));
  };
  try {
    const double k_min = knowledge_at_phase(pair, basis, delta_min);
    check.ridge = std::abs(k_min - 1.0) <= kTolIterative;
    for (Index r = 0; r < 64; ++r) {
      const double delta = 2.0 * M_PI * static_cast<double>(r) / 64.0;
      const double dev =
          std::abs(knowledge_at_phase(pair, basis, delta) - expected(delta));
      max_dev = std::max(max_dev, dev);
    }
    max_dev = std::max(
        max_dev,
        std::abs(knowledge_at_phase(pair, basis, delta_min) - expected(delta_min)));
  } catch (const UndefinedAtPhase&) {
    defined_everywhere = false;
    check.ridge = false;
  }
  check.max_formula_deviation = max_dev;
  check.closed_form = defined_everywhere && max_dev <= kTolIterative;

  return check;
}

}  // namespace wwk
