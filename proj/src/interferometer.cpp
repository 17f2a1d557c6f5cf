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

#include "wwk/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace wwk {

namespace {

void check_unit(const Vector& v, const char* name) {
  if (!v.allFinite()) {
    throw InvalidInput(std::string("DetectorPair: ") + name +
                       " has a non-finite entry");
  }
  if (std::abs(v.norm() - 1.0) > kTolAlgebraic) {
    throw InvalidInput(std::string("DetectorPair: ") + name +
                       " is not normalized");
  }
}

}  // namespace

DetectorPair DetectorPair::make(Vector a, Vector b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("DetectorPair: states differ in dimension");
  }
  if (a.size() == 0) {
    throw InvalidInput("DetectorPair: empty states");
  }
  check_unit(a, "chi_a");
  check_unit(b, "chi_b");
  return DetectorPair{std::move(a), std::move(b)};
}

Complex overlap(const DetectorPair& pair) { return pair.chi_a.dot(pair.chi_b); }

double visibility(const DetectorPair& pair) {
  return std::min(std::abs(overlap(pair)), 1.0);
}

double FringeSpec::probability(double delta) const {
  return 0.5 * (1.0 + visibility * std::cos(delta + theta));
}

FringeSpec fringe(const DetectorPair& pair) {
  const Complex s = overlap(pair);
  FringeSpec spec;
  spec.visibility = std::min(std::abs(s), 1.0);
  // P(delta) = (1 + Re[e^{-i delta} s]) / 2 = (1 + V cos(delta - arg s)) / 2.
  spec.theta = -std::arg(s);
  if (spec.theta <= -M_PI) {
    spec.theta += 2.0 * M_PI;
  }
  return spec;
}

double detection_probability(const DetectorPair& pair, double delta) {
  const Complex s = overlap(pair);
  const double p = 0.5 * (1.0 + (std::polar(1.0, -delta) * s).real());
  return std::clamp(p, 0.0, 1.0);
}

Vector projected_detector_state(const DetectorPair& pair, double delta) {
  Vector u = pair.chi_a + std::polar(1.0, -delta) * pair.chi_b;
  const double zeta = u.norm();
  if (zeta <= kTolAlgebraic) {
    throw DegenerateProjection(
        "projected_detector_state: dark fringe at full visibility");
  }
  return u / zeta;
}

Matrix detector_density(const DetectorPair& pair) {
  return 0.5 * (pair.chi_a * pair.chi_a.adjoint() +
                pair.chi_b * pair.chi_b.adjoint());
}

Eigen::Matrix2cd quanton_density(const DetectorPair& pair) {
  const Complex s = overlap(pair);
  Eigen::Matrix2cd rho;
  rho << 0.5, 0.5 * std::conj(s), 0.5 * s, 0.5;
  return rho;
}

}  // namespace wwk
