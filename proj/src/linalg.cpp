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

#include "wwk/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace wwk {

namespace {

// Two-pass modified Gram-Schmidt projection of `count` leading columns of
// `q` out of `v`; returns the residual norm.
double project_out(const Matrix& q, Index count, Vector& v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Index j = 0; j < count; ++j) {
      v -= q.col(j).dot(v) * q.col(j);
    }
  }
  return v.norm();
}

}  // namespace

Vector phase_normalized(const Vector& v) {
  Index pivot = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > best + 1e-14) {
      best = mag;
      pivot = i;
    }
  }
  if (best <= 0.0) {
    return v;
  }
  const Complex z = v(pivot);
  return v * (std::abs(z) / z);
}

Matrix orthonormal_complement(const Matrix& span, Index dim) {
  if (span.rows() != dim) {
    throw DimensionMismatch("orthonormal_complement: span rows != dim");
  }
  const Index k = span.cols();
  if (k > dim) {
    throw RankDeficient("orthonormal_complement: more vectors than dimensions");
  }

  Matrix q(dim, dim);
  for (Index j = 0; j < k; ++j) {
    Vector v = span.col(j);
    const double residual = project_out(q, j, v);
    if (residual < 1e-10) {
      throw RankDeficient("orthonormal_complement: span is rank deficient");
    }
    q.col(j) = v / residual;
  }

  // Sweep the standard basis in index order, keeping vectors that survive
  // projection onto the running orthonormal set.  Every step can only
  // remove one dimension, so dim - k survivors always exist.
  Matrix out(dim, dim - k);
  Index found = 0;
  for (Index i = 0; i < dim && found < dim - k; ++i) {
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    const double residual = project_out(q, k + found, v);
    if (residual < 1e-6) {
      continue;
    }
    v /= residual;
    v = phase_normalized(v);
    q.col(k + found) = v;
    out.col(found) = v;
    ++found;
  }
  if (found < dim - k) {
    throw RankDeficient("orthonormal_complement: completion failed");
  }
  return out;
}

EigResult hermitian_eig(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian_eig: matrix is not square");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw NotHermitian("hermitian_eig: matrix deviates from its adjoint");
  }

  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }

  const Index n = m.rows();
  EigResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = phase_normalized(solver.eigenvectors().col(n - 1 - i));
  }
  return out;
}

Matrix random_unitary(Index dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  Matrix q(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    Vector v = g.col(j);
    double residual = project_out(q, j, v);
    while (residual < 1e-8) {
      // Resampling keeps Haar exactness; hitting this needs a numerically
      // dependent Gaussian draw.
      for (Index i = 0; i < dim; ++i) {
        v(i) = rng.complex_gaussian();
      }
      residual = project_out(q, j, v);
    }
    q.col(j) = v / residual;
  }
  return q;
}

Matrix random_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

Vector random_state(Index dim, Rng& rng) {
  Vector v(dim);
  double norm = 0.0;
  do {
    for (Index i = 0; i < dim; ++i) {
      v(i) = rng.complex_gaussian();
    }
    norm = v.norm();
  } while (norm < 1e-8);
  return v / norm;
}

}  // namespace wwk
