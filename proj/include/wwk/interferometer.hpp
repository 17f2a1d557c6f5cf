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

#include "wwk/linalg.hpp"

namespace wwk {

// A symmetric two-path interferometer with a which-way detector.  The
// quanton takes path A or B with amplitude 1/sqrt(2) each and the detector
// ends up in |chi_a> or |chi_b> respectively; the pair of conditional
// detector states is all that the downstream analysis ever needs.
//
// Phase convention, used consistently everywhere: a relative phase delta on
// path B enters as exp(-i delta), so the detector state conditioned on a
// detection at phase delta is proportional to chi_a + exp(-i delta) chi_b.
struct DetectorPair {
  Vector chi_a;
  Vector chi_b;

  Index dim() const { return chi_a.size(); }

  // Validates matching dimensions, finite entries, and unit norms (1e-12).
  static DetectorPair make(Vector a, Vector b);
};

// <chi_a|chi_b>.
Complex overlap(const DetectorPair& pair);

// Fringe visibility V = |<chi_a|chi_b>|, clamped into [0, 1].
double visibility(const DetectorPair& pair);

// The detection pattern P(delta) = (1 + V cos(delta + theta)) / 2 as an
// amplitude/offset pair, with theta reduced into (-pi, pi].
struct FringeSpec {
  double visibility = 0.0;
  double theta = 0.0;

  double probability(double delta) const;
};

FringeSpec fringe(const DetectorPair& pair);

// P(delta), evaluated directly from the overlap.
double detection_probability(const DetectorPair& pair, double delta);

// Normalized detector state conditioned on a detection at phase delta,
// (chi_a + exp(-i delta) chi_b) / zeta.  Throws DegenerateProjection when
// the norm zeta is below 1e-12 (full visibility at a dark fringe).
Vector projected_detector_state(const DetectorPair& pair, double delta);

// Reduced density matrix of the detector, (|chi_a><chi_a| +
// |chi_b><chi_b|) / 2.
Matrix detector_density(const DetectorPair& pair);

// Reduced 2x2 density matrix of the quanton in the {A, B} path basis; the
// off-diagonal element is <chi_b|chi_a> / 2.
Eigen::Matrix2cd quanton_density(const DetectorPair& pair);

}  // namespace wwk
