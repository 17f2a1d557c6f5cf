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

#include "helpers.hpp"
#include "wwk/natural.hpp"
#include "wwk/oracle.hpp"
#include "wwk/presets.hpp"

#include <doctest.h>

#include <cmath>

namespace {

using namespace wwk;
using wwk::testing::max_abs;

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("ensure_dim3 passes large detectors through and lifts qubits") {
  Rng rng(71);
  const DetectorPair big = oracle::random_pair(3, rng);
  const DetectorPair same = ensure_dim3(big);
  CHECK(max_abs(same.chi_a - big.chi_a) == 0.0);
  CHECK(max_abs(same.chi_b - big.chi_b) == 0.0);

  for (int trial = 0; trial < 100; ++trial) {
    const DetectorPair qubit = oracle::random_pair(2, rng);
    const DetectorPair lifted = ensure_dim3(qubit);
    REQUIRE(lifted.dim() == 4);
    CHECK(std::abs(overlap(lifted) - overlap(qubit)) <= kTolAlgebraic);
    CHECK(lifted.chi_a(1) == Complex(0.0, 0.0));
    CHECK(lifted.chi_a(3) == Complex(0.0, 0.0));
    CHECK(lifted.chi_a(0) == qubit.chi_a(0));
    CHECK(lifted.chi_a(2) == qubit.chi_a(1));
  }

  Vector one = Vector::Zero(1);
  one(0) = 1.0;
  CHECK_THROWS_AS(ensure_dim3(DetectorPair::make(one, one)), InvalidInput);
}

TEST_CASE("ancilla_t is the deterministic orthogonal unit vector") {
  const double r = 1.0 / std::sqrt(2.0);
  const DetectorPair pair = presets::two_qubit(r, r);
  const Vector t = ancilla_t(pair);
  CHECK(std::abs(t.norm() - 1.0) <= kTolAlgebraic);
  CHECK(std::abs(inner(t, pair.chi_a)) <= kTolIterative);
  CHECK(std::abs(inner(t, pair.chi_b)) <= kTolIterative);

  // For the two-qubit pair the complement sweep lands on
  // beta |00> - alpha |10> - alpha |01>, normalized and phase-fixed.
  Vector expected = Vector::Zero(4);
  expected(0) = r;
  expected(2) = -r;
  expected(1) = -r;
  expected /= expected.norm();
  CHECK(max_abs(t - expected) <= kTolIterative);

  const Vector again = ancilla_t(pair);
  CHECK(max_abs(t - again) == 0.0);
}

TEST_CASE("ancilla_t preconditions") {
  Rng rng(73);
  const DetectorPair qubit = oracle::random_pair(2, rng);
  CHECK_THROWS_AS(ancilla_t(qubit), DimensionMismatch);

  Vector e0 = Vector::Zero(3);
  e0(0) = 1.0;
  CHECK_THROWS_AS(ancilla_t(DetectorPair::make(e0, e0)), OverlapTooClose);
  CHECK_THROWS_AS(natural_basis(DetectorPair::make(e0, e0)), OverlapTooClose);
}

TEST_CASE("the construction reproduces the product basis on two-qubit pairs") {
  const ReadoutBasis fock = presets::natural_fock_basis();
  for (const double a : {0.2, 0.5, 1.0 / std::sqrt(2.0), 0.9}) {
    const double b = std::sqrt(1.0 - a * a);
    const DetectorPair pair = presets::two_qubit(a, b);
    // ancilla_t pivots on the largest-magnitude component, so its sign
    // convention flips once a outweighs b; eta = pi selects the member of
    // the family that matches the product basis exactly in both regimes.
    NaturalBasisParams params;
    params.eta = a > b ? kPi : 0.0;
    const ReadoutBasis basis = natural_basis(pair, params);
    REQUIRE(basis.size() == 4);
    CHECK(basis.labels[0] == "0");
    CHECK(basis.labels[1] == "+");
    CHECK(basis.labels[2] == "-");
    CHECK(basis.labels[3] == "aux0");
    for (Index j = 0; j < 3; ++j) {
      CHECK(max_abs(basis.vectors.col(j) - fock.vectors.col(j)) <=
            kTolIterative);
    }
    CHECK(verify_natural(pair, basis).pass());
    CHECK(verify_natural(pair, fock).pass());
  }
}

TEST_CASE("natural bases of random pairs verify across dimensions") {
  Rng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = 3 + trial % 6;
    const DetectorPair pair = oracle::random_pair(dim, rng);
    NaturalBasisParams params;
    params.eta = 2.0 * kPi * rng.uniform();
    params.v_phase = 2.0 * kPi * rng.uniform();
    const ReadoutBasis basis = natural_basis(pair, params);

    const NaturalCheck check = verify_natural(pair, basis);
    CHECK(check.pass());
    CHECK(check.max_gram_deviation <= kTolIterative);
    CHECK(check.max_balance_deviation <= kTolAlgebraic);
    CHECK(check.max_cross_overlap <= kTolAlgebraic);
    CHECK(check.max_formula_deviation <= kTolIterative);

    // The balanced outcome overlaps both paths with magnitude sqrt(V); the
    // one-sided outcomes take all the rest.
    const double root_v = std::sqrt(visibility(pair));
    const double oa0 = std::abs(basis.vectors.col(0).dot(pair.chi_a));
    const double ob0 = std::abs(basis.vectors.col(0).dot(pair.chi_b));
    CHECK(std::abs(oa0 - root_v) <= kTolAlgebraic);
    CHECK(std::abs(ob0 - root_v) <= kTolAlgebraic);
    CHECK(std::abs(basis.vectors.col(1).dot(pair.chi_b)) <= kTolAlgebraic);
    CHECK(std::abs(basis.vectors.col(2).dot(pair.chi_a)) <= kTolAlgebraic);

    // The ancilla component of the balanced outcome has the fixed magnitude
    // sqrt((1 - V) / (1 + V)).
    const Vector t = ancilla_t(pair);
    const double x2 = std::abs(t.dot(basis.vectors.col(0)));
    const double vis = visibility(pair);
    CHECK(std::abs(x2 - std::sqrt((1.0 - vis) / (1.0 + vis))) <=
          kTolIterative);
  }
}

TEST_CASE("free phases change the vectors but not the statistics") {
  Rng rng(83);
  const DetectorPair pair = oracle::random_pair(5, rng);
  const ReadoutBasis ref = natural_basis(pair);
  const OutcomeStats ref_stats = guess_probabilities(pair, ref);
  const double ref_k = knowledge(pair, ref).knowledge;

  for (int trial = 0; trial < 20; ++trial) {
    NaturalBasisParams params;
    params.eta = 2.0 * kPi * rng.uniform();
    params.v_phase = 2.0 * kPi * rng.uniform();
    const ReadoutBasis basis = natural_basis(pair, params);
    const OutcomeStats stats = guess_probabilities(pair, basis);
    CHECK((stats.p - ref_stats.p).cwiseAbs().maxCoeff() <= kTolIterative);
    CHECK((stats.q - ref_stats.q).cwiseAbs().maxCoeff() <= kTolIterative);
    CHECK(std::abs(knowledge(pair, basis).knowledge - ref_k) <=
          kTolIterative);
    for (int i = 0; i < 16; ++i) {
      const double delta = 2.0 * kPi * i / 16.0;
      CHECK(std::abs(knowledge_at_phase(pair, basis, delta) -
                     knowledge_at_phase(pair, ref, delta)) <= kTolIterative);
    }
  }
}

TEST_CASE("qubit detectors go through the ancilla lift") {
  Rng rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const DetectorPair qubit = oracle::random_pair(2, rng);
    const DetectorPair lifted = ensure_dim3(qubit);
    const ReadoutBasis basis = natural_basis(lifted);
    CHECK(verify_natural(lifted, basis).pass());

    const Complex s = overlap(qubit);
    const double vis = std::abs(s);
    const double gamma = std::arg(s);
    for (int i = 0; i < 16; ++i) {
      const double delta = 2.0 * kPi * i / 16.0 + 0.03;
      const double expected =
          (1.0 - vis) / (1.0 + vis * std::cos(delta - gamma));
      CHECK(std::abs(knowledge_at_phase(lifted, basis, delta) - expected) <=
            kTolIterative);
    }
  }
}

TEST_CASE("verify_natural rejects non-eraser bases") {
  const double r = 1.0 / std::sqrt(2.0);
  const DetectorPair pair = presets::two_qubit(r, r);

  const NaturalCheck canon = verify_natural(pair, canonical_basis(pair));
  CHECK(canon.orthonormal);
  CHECK_FALSE(canon.structure);
  CHECK_FALSE(canon.ridge);
  CHECK_FALSE(canon.closed_form);
  CHECK_FALSE(canon.pass());

  // A basis built for a different pair fails the balance grading.
  Rng rng(97);
  const DetectorPair other = oracle::random_pair(4, rng);
  const NaturalCheck wrong = verify_natural(pair, natural_basis(other));
  CHECK_FALSE(wrong.pass());

  CHECK_THROWS_AS(
      verify_natural(oracle::random_pair(3, rng), natural_basis(other)),
      DimensionMismatch);
}

TEST_CASE("verify_natural ignores column order and labels") {
  const double r = 1.0 / std::sqrt(2.0);
  const DetectorPair pair = presets::two_qubit(r, r);
  // Plain identity basis: same outcome set as the product basis, different
  // order and labels.
  const ReadoutBasis identity =
      ReadoutBasis::make(Matrix::Identity(4, 4), {"w", "x", "y", "z"});
  CHECK(verify_natural(pair, identity).pass());
}
