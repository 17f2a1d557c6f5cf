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

#include "wwk/errors.hpp"
#include "wwk/rng.hpp"
#include "wwk/types.hpp"

#include <cstdint>

namespace wwk {

// Hermitian inner product <u|v>, conjugate-linear in the first argument.
template <typename DerivedU, typename DerivedV>
Complex inner(const Eigen::MatrixBase<DerivedU>& u,
              const Eigen::MatrixBase<DerivedV>& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner: operands have different dimension");
  }
  return u.dot(v);
}

// Rotates a vector by a global phase so its largest-magnitude entry is real
// and positive.  Ties on magnitude go to the lowest index.  Used to make
// eigenvector and basis output reproducible.
Vector phase_normalized(const Vector& v);

// Orthonormal basis of the orthogonal complement of span(columns) inside
// C^dim.  Columns need not be normalized but must be linearly independent
// (RankDeficient otherwise).  The result is deterministic: standard basis
// vectors are swept in index order and Gram-Schmidt residuals above a fixed
// threshold are kept, so the complement of a span touching only low indices
// comes out aligned with the remaining standard axes.
Matrix orthonormal_complement(const Matrix& span, Index dim);

struct EigResult {
  RealVector values;  // sorted descending
  Matrix vectors;     // orthonormal columns in matching order, each
                      // phase-normalized
};

// Eigendecomposition of a Hermitian matrix.  Throws NotHermitian if the
// input deviates from its adjoint by more than 1e-10, DimensionMismatch if
// it is not square.
EigResult hermitian_eig(const Matrix& m);

// Haar-distributed random unitary: Gram-Schmidt of a square matrix of
// i.i.d. complex Gaussians, consuming draws column-major from `rng`.
Matrix random_unitary(Index dim, Rng& rng);
Matrix random_unitary(Index dim, std::uint64_t seed);

}  // namespace wwk
