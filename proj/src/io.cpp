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

#include "wwk/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace wwk {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

OrderedJson state_to_json_array(const Vector& v) {
  OrderedJson arr = OrderedJson::array();
  for (Index i = 0; i < v.size(); ++i) {
    arr.push_back({v(i).real(), v(i).imag()});
  }
  return arr;
}

Vector state_from_json_array(const OrderedJson& arr, Index dim,
                             const char* name) {
  if (!arr.is_array() || static_cast<Index>(arr.size()) != dim) {
    throw InvalidInput(std::string("state json: ") + name +
                       " must be an array of dim [re, im] pairs");
  }
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const auto& entry = arr[static_cast<std::size_t>(i)];
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number() || !entry[1].is_number()) {
      throw InvalidInput(std::string("state json: ") + name +
                         " entries must be [re, im] pairs");
    }
    v(i) = Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return v;
}

// States are accepted if their norm is within 1e-6 of 1 and then snapped
// back to exactly unit norm.
Vector renormalized(Vector v, const char* name) {
  if (!v.allFinite()) {
    throw InvalidInput(std::string("state json: ") + name +
                       " has a non-finite entry");
  }
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw InvalidInput(std::string("state json: ") + name +
                       " norm is outside [1 - 1e-6, 1 + 1e-6]");
  }
  return v / norm;
}

OrderedJson parse(const std::string& text) {
  OrderedJson j = OrderedJson::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InvalidInput("json: parse error");
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInput("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string pair_to_json(const DetectorPair& pair) {
  OrderedJson j;
  j["dim"] = pair.dim();
  j["chi_a"] = state_to_json_array(pair.chi_a);
  j["chi_b"] = state_to_json_array(pair.chi_b);
  return j.dump() + "\n";
}

DetectorPair pair_from_json(const std::string& text) {
  const OrderedJson j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("chi_a") ||
      !j.contains("chi_b")) {
    throw InvalidInput(
        "state json: need an object with dim, chi_a and chi_b");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() < 1) {
    throw InvalidInput("state json: dim must be a positive integer");
  }
  const Index dim = j["dim"].get<Index>();
  Vector a = renormalized(state_from_json_array(j["chi_a"], dim, "chi_a"),
                          "chi_a");
  Vector b = renormalized(state_from_json_array(j["chi_b"], dim, "chi_b"),
                          "chi_b");
  return DetectorPair::make(std::move(a), std::move(b));
}

DetectorPair load_pair(const std::string& path) {
  return pair_from_json(read_file(path));
}

std::string basis_to_json(const ReadoutBasis& basis) {
  OrderedJson j;
  j["dim"] = basis.dim();
  OrderedJson vectors = OrderedJson::array();
  for (Index i = 0; i < basis.size(); ++i) {
    vectors.push_back(state_to_json_array(basis.vectors.col(i)));
  }
  j["vectors"] = std::move(vectors);
  j["labels"] = basis.labels;
  return j.dump() + "\n";
}

ReadoutBasis basis_from_json(const std::string& text) {
  const OrderedJson j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors")) {
    throw InvalidInput("basis json: need an object with dim and vectors");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() < 1) {
    throw InvalidInput("basis json: dim must be a positive integer");
  }
  const Index dim = j["dim"].get<Index>();
  const auto& vecs = j["vectors"];
  if (!vecs.is_array() || static_cast<Index>(vecs.size()) != dim) {
    throw InvalidInput("basis json: need dim vectors");
  }
  Matrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    m.col(i) = state_from_json_array(vecs[static_cast<std::size_t>(i)], dim,
                                     "vectors");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() ||
        static_cast<Index>(j["labels"].size()) != dim) {
      throw InvalidInput("basis json: need one label per vector");
    }
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) {
        throw InvalidInput("basis json: labels must be strings");
      }
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (Index i = 0; i < dim; ++i) {
      labels.push_back("W" + std::to_string(i));
    }
  }
  return ReadoutBasis::make(std::move(m), std::move(labels));
}

ReadoutBasis load_basis(const std::string& path) {
  return basis_from_json(read_file(path));
}

std::string report_to_json(const KnowledgeReport& report,
                           const OutcomeStats& stats,
                           const std::vector<std::string>& labels) {
  OrderedJson j;
  j["visibility"] = report.visibility;
  j["likelihood"] = report.likelihood;
  j["knowledge"] = report.knowledge;
  j["duality_slack"] = report.duality_slack;
  OrderedJson outcomes = OrderedJson::array();
  for (Index i = 0; i < stats.p.size(); ++i) {
    OrderedJson o;
    o["label"] = labels[static_cast<std::size_t>(i)];
    o["p"] = stats.p(i);
    o["q"] = stats.q(i);
    o["guess"] = to_string(stats.guess[static_cast<std::size_t>(i)]);
    outcomes.push_back(std::move(o));
  }
  j["outcomes"] = std::move(outcomes);
  return j.dump() + "\n";
}

std::string sweep_to_csv(const PhaseSweep& sweep) {
  std::string out = "delta_over_pi,P,K";
  for (Index i = 0; i < sweep.joint.cols(); ++i) {
    out += ",p_" + std::to_string(i);
  }
  out += "\n";
  for (Index r = 0; r < sweep.deltas.size(); ++r) {
    out += fmt17(sweep.deltas(r) / M_PI);
    out += "," + fmt17(sweep.detection(r));
    out += ",";
    out += sweep.k_defined[static_cast<std::size_t>(r)] ? fmt17(sweep.k(r))
                                                        : "nan";
    for (Index i = 0; i < sweep.joint.cols(); ++i) {
      out += "," + fmt17(sweep.joint(r, i));
    }
    out += "\n";
  }
  return out;
}

std::string sweep_to_json(const PhaseSweep& sweep) {
  OrderedJson j;
  j["labels"] = sweep.labels;
  OrderedJson rows = OrderedJson::array();
  for (Index r = 0; r < sweep.deltas.size(); ++r) {
    OrderedJson row;
    row["delta_over_pi"] = sweep.deltas(r) / M_PI;
    row["P"] = sweep.detection(r);
    if (sweep.k_defined[static_cast<std::size_t>(r)]) {
      row["K"] = sweep.k(r);
    } else {
      row["K"] = nullptr;
    }
    OrderedJson joint = OrderedJson::array();
    for (Index i = 0; i < sweep.joint.cols(); ++i) {
      joint.push_back(sweep.joint(r, i));
    }
    row["p"] = std::move(joint);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump() + "\n";
}

// Sweep schema evaluated at each bin center, extended with the Monte Carlo
// tallies.
std::string game_to_csv(const std::vector<oracle::GameBin>& bins,
                        const DetectorPair& pair, const ReadoutBasis& basis) {
  std::string out = "delta_over_pi,P,K";
  for (Index i = 0; i < basis.size(); ++i) {
    out += ",p_" + std::to_string(i);
  }
  out += ",n,n_correct,K_hat,stderr\n";
  for (const auto& bin : bins) {
    out += fmt17(bin.delta_center / M_PI);
    out += "," + fmt17(detection_probability(pair, bin.delta_center));
    out += ",";
    try {
      out += fmt17(knowledge_at_phase(pair, basis, bin.delta_center));
    } catch (const UndefinedAtPhase&) {
      out += "nan";
    }
    const RealVector joint =
        joint_probabilities(pair, basis, bin.delta_center);
    for (Index i = 0; i < joint.size(); ++i) {
      out += "," + fmt17(joint(i));
    }
    out += "," + std::to_string(bin.n);
    out += "," + std::to_string(bin.n_correct);
    out += ",";
    out += bin.defined ? fmt17(bin.k_hat) : "nan";
    out += ",";
    out += bin.defined ? fmt17(bin.stderr_k) : "nan";
    out += "\n";
  }
  return out;
}

}  // namespace wwk
