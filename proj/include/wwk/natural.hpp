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

namespace wwk {

// Free phases of the eraser-type basis construction.  Any choice yields the
// same outcome statistics; the defaults give real coefficients for real
// inputs.
struct NaturalBasisParams {
  double eta = 0.0;      // phase of the ancilla component of |0>
  double v_phase = 0.0;  // phase of v, where |v| = sqrt(V)
};

// The construction below needs a third detector dimension.  For dim >= 3
// this is the identity; a dim-2 pair is embedded as chi (x) |0> of a
// four-dimensional detector (an attached ancilla qubit), and dim 1 is
// rejected (InvalidInput) because a one-dimensional detector records
// nothing.
DetectorPair ensure_dim3(const DetectorPair& pair);

// Deterministic unit vector orthogonal to both chi_a and chi_b: the first
// column of the orthonormal complement of their span.  Requires dim >= 3
// and |<chi_a|chi_b>| <= 1 - 1e-10 (OverlapTooClose otherwise).
Vector ancilla_t(const DetectorPair& pair);

// Eraser-type readout basis {|0>, |+>, |->} completed with "aux<i>"
// columns.  |0> overlaps both detector states equally (a zero-information
// outcome), |+> is reached only from chi_a and |-> only from chi_b (full
// information).  With |v|^2 = V, g = arg<chi_a|chi_b>, w = sqrt(1 - V):
//
//   |0> = [v* chi_a + v* e^{-ig} chi_b] / (1 + V) + x2 |t>,
//         |x2| = sqrt((1 - V) / (1 + V)),
//   |+> = (chi_a - v |0>) / w,
//   |-> = (chi_b - v e^{ig} |0>) / w,
//
// and at V = 0 the corner case |0> = e^{i eta} |t>, |+> = chi_a,
// |-> = chi_b.  Preconditions as for ancilla_t.
ReadoutBasis natural_basis(const DetectorPair& pair,
                           const NaturalBasisParams& params = {});

// Checks that `basis` has the defining properties of an eraser-type basis
// for `pair`.  Deviations are recorded; `pass()` is the conjunction of all
// the flags.
struct NaturalCheck {
  bool orthonormal = false;     // Gram deviation <= 1e-10
  bool structure = false;       // at most one reachable zero-information
                                // outcome; all other reachable outcomes
                                // carry full information
  bool zero_info_balanced = false;  // both overlaps of the zero-information
                                    // outcome equal sqrt(V) within 1e-12
  bool full_info_exclusive = false;  // cross-overlaps <= 1e-12
  bool ridge = false;        // K(delta_min) = 1 within 1e-10, where
                             // delta_min = pi + arg<chi_a|chi_b>
  bool closed_form = false;  // K(delta) = (1 - V) / (1 + V cos(delta - g))
                             // within 1e-10 on a 64-point grid
  double max_gram_deviation = 0.0;
  double max_balance_deviation = 0.0;
  double max_cross_overlap = 0.0;
  double max_formula_deviation = 0.0;

  bool pass() const {
    return orthonormal && structure && zero_info_balanced &&
           full_info_exclusive && ridge && closed_form;
  }
};

NaturalCheck verify_natural(const DetectorPair& pair,
                            const ReadoutBasis& basis);

}  // namespace wwk
