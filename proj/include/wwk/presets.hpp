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

#include <cmath>

namespace wwk::presets {

// Two-qubit detector with basis order {|00>, |01>, |10>, |11>} (first
// qubit is the slow index): path A excites the first qubit,
//
//   chi_a = alpha |00> + beta |10>,   chi_b = alpha |00> + beta |01>,
//
// so V = <chi_a|chi_b> = |alpha|^2.  Requires |alpha|^2 + |beta|^2 = 1
// within 1e-10 (InvalidInput otherwise).
DetectorPair two_qubit(Complex alpha, Complex beta);

// Per-qubit product basis {|00>, |10>, |01>, |11>} with labels "00", "10",
// "01", "11".  For any two_qubit pair its first three vectors act as an
// eraser-type basis (|00> carries no path information, |10> and |01> are
// fully one-sided) and |11> is unreachable.
ReadoutBasis natural_fock_basis();

// Closed-form expectations for the two_qubit pair, for cross-checking the
// generic pipeline.
struct TwoQubitExpectations {
  double visibility = 0.0;     // |alpha|^2
  double k_natural = 0.0;      // |beta|^2 = 1 - V
  double k_canonical = 0.0;    // sqrt(1 - V^2)
  double gamma_gap = 0.0;      // sqrt(1 - |alpha|^4)
  double crossover_cos = 0.0;  // NaN unless 0 < V < 1
  double p_zero_info = 0.0;    // phase-averaged p of the |00> outcome
  double p_full_info = 0.0;    // p of |10> (= p of |01>)
  double q_full_info = 0.0;    // q of the canonical outcomes, (1 + gap)/2

  // Canonical-basis vectors in closed form; empty when alpha or beta
  // vanishes (the optimal basis degenerates to the product basis there).
  bool has_canonical_vectors = false;
  Vector e0, ea, eb;  // zero, +gap, -gap eigenvectors

  // Phase-resolved knowledge of the eraser-type readout,
  // (1 - V) / (1 + V cos dl).
  double k_natural_at(double dl) const {
    return (1.0 - visibility) / (1.0 + visibility * std::cos(dl));
  }
};

TwoQubitExpectations two_qubit_expectations(Complex alpha, Complex beta);

// One-atom maser detector: an atom crosses one of two cavities and deposits
// a photon with amplitude sin(theta).  Exactly two_qubit(cos theta,
// sin theta), with the first qubit as cavity A's photon number.
DetectorPair micromaser(double theta);

}  // namespace wwk::presets
