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

#include "wwk/presets.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace wwk::presets {

namespace {

void check_amplitudes(Complex alpha, Complex beta) {
  const double total = std::norm(alpha) + std::norm(beta);
  if (std::abs(total - 1.0) > kTolIterative) {
    throw InvalidInput("two_qubit: |alpha|^2 + |beta|^2 must be 1");
  }
}

}  // namespace

DetectorPair two_qubit(Complex alpha, Complex beta) {
  check_amplitudes(alpha, beta);
  // Absorb rounding in the caller's amplitudes so the states are unit to
  // machine precision.
  const double scale = 1.0 / std::sqrt(std::norm(alpha) + std::norm(beta));
  alpha *= scale;
  beta *= scale;

  Vector a = Vector::Zero(4);
  Vector b = Vector::Zero(4);
  a(0) = alpha;  // |00>
  a(2) = beta;   // |10>
  b(0) = alpha;  // |00>
  b(1) = beta;   // |01>
  return DetectorPair::make(std::move(a), std::move(b));
}

ReadoutBasis natural_fock_basis() {
  Matrix vectors = Matrix::Zero(4, 4);
  vectors(0, 0) = 1.0;  // |00>
  vectors(2, 1) = 1.0;  // |10>
  vectors(1, 2) = 1.0;  // |01>
  vectors(3, 3) = 1.0;  // |11>
  return ReadoutBasis::make(std::move(vectors), {"00", "10", "01", "11"});
}

TwoQubitExpectations two_qubit_expectations(Complex alpha, Complex beta) {
  check_amplitudes(alpha, beta);
  const double scale = 1.0 / std::sqrt(std::norm(alpha) + std::norm(beta));
  alpha *= scale;
  beta *= scale;

  const double va = std::norm(alpha);  // the visibility
  const double gap = std::sqrt(1.0 - va * va);

  TwoQubitExpectations e;
  e.visibility = va;
  e.k_natural = std::norm(beta);
  e.k_canonical = gap;
  e.gamma_gap = gap;
  e.crossover_cos = (va > 0.0 && va < 1.0)
                        ? (std::sqrt((1.0 - va) / (1.0 + va)) - 1.0) / va
                        : std::numeric_limits<double>::quiet_NaN();
  e.p_zero_info = va;
  e.p_full_info = 0.5 * (1.0 - va);
  e.q_full_info = 0.5 * (1.0 + gap);

  e.has_canonical_vectors = va > 0.0 && va < 1.0;
  if (e.has_canonical_vectors) {
    const Complex omega_p =
        (std::norm(beta) + gap) / (2.0 * alpha * std::conj(beta));
    const Complex omega_m =
        (std::norm(beta) - gap) / (2.0 * alpha * std::conj(beta));
    const double c0 = std::sqrt((1.0 - va) / (1.0 + va));
    const double ca = std::sqrt(va / (1.0 + va));
    const Complex slope = std::conj(alpha) / std::conj(beta);

    e.e0 = Vector::Zero(4);
    e.e0(0) = c0;
    e.e0(2) = -c0 * slope;
    e.e0(1) = -c0 * slope;

    e.ea = Vector::Zero(4);
    e.ea(0) = ca;
    e.ea(2) = ca * omega_p;
    e.ea(1) = ca * omega_m;

    e.eb = Vector::Zero(4);
    e.eb(0) = ca;
    e.eb(2) = ca * omega_m;
    e.eb(1) = ca * omega_p;
  }
  return e;
}

DetectorPair micromaser(double theta) {
  if (!(theta >= 0.0) || !(theta <= M_PI / 2.0)) {
    throw InvalidInput("micromaser: theta must lie in [0, pi/2]");
  }
  return two_qubit(std::cos(theta), std::sin(theta));
}

}  // namespace wwk::presets
