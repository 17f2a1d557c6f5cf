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

#include "wwk/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace wwk::testing {

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double gram_deviation(const Matrix& vectors) {
  const Matrix gram = vectors.adjoint() * vectors;
  return max_abs(gram - Matrix::Identity(vectors.cols(), vectors.cols()));
}

// Deterministic non-trivial test pair on C^dim.
inline DetectorPair fixed_pair(Index dim, std::uint64_t seed = 7) {
  Rng rng(seed);
  return oracle::random_pair(dim, rng);
}

// Independent 2x2 Hermitian eigensolver (quadratic formula), for checking
// the production eigensolver against a closed form.
struct TwoByTwoEig {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
};

inline TwoByTwoEig eig2(double a, double d, Complex b) {
  // [[a, b], [conj(b), d]]
  const double mean = 0.5 * (a + d);
  const double disc =
      std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean + disc, mean - disc};
}

}  // namespace wwk::testing
