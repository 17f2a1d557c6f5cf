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
#include "wwk/readout.hpp"

#include <string>

namespace wwk {

// JSON state schema:
//   {"dim": d, "chi_a": [[re, im], ...], "chi_b": [[re, im], ...]}
// The loader renormalizes states whose norm lies in [1 - 1e-6, 1 + 1e-6]
// and rejects anything further out (InvalidInput).  Schema violations are
// InvalidInput as well.
std::string pair_to_json(const DetectorPair& pair);
DetectorPair pair_from_json(const std::string& text);
DetectorPair load_pair(const std::string& path);

// Basis files reuse the state schema with "vectors": [[[re, im], ...], ...]
// and optional "labels": [...]; missing labels become "W0", "W1", ...
std::string basis_to_json(const ReadoutBasis& basis);
ReadoutBasis basis_from_json(const std::string& text);
ReadoutBasis load_basis(const std::string& path);

// Shortest round-trip decimal for floats in JSON; CSV cells use %.17g.
std::string report_to_json(const KnowledgeReport& report,
                           const OutcomeStats& stats,
                           const std::vector<std::string>& labels);

// CSV with header delta_over_pi,P,K,p_0,...,p_{n-1}; undefined K cells are
// "nan".  JSON mirrors the same columns (plus outcome labels) with null
// for undefined K.
std::string sweep_to_csv(const PhaseSweep& sweep);
std::string sweep_to_json(const PhaseSweep& sweep);

// The sweep columns evaluated at each bin center, extended with the Monte
// Carlo tallies: delta_over_pi,P,K,p_0,...,p_{n-1},n,n_correct,K_hat,stderr.
// Estimates of empty bins and K cells at vanishing P are "nan".
std::string game_to_csv(const std::vector<oracle::GameBin>& bins,
                        const DetectorPair& pair, const ReadoutBasis& basis);

}  // namespace wwk
