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

#include "wwk/types.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace wwk {

// Seeded random source with a platform-independent stream.  The mt19937_64
// raw sequence is pinned by the C++ standard; the uniform and Gaussian
// transforms are done by hand because the distribution adaptors in
// <random> are free to differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform on (0, 1]: top 53 bits of the raw draw, shifted off zero so
  // that log() in the Gaussian transform is always safe.
  double uniform() {
    return static_cast<double>((raw() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; draws come out in pairs.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 2.0 * M_PI * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Normalized state with i.i.d. complex Gaussian amplitudes (Haar on the
// sphere).
Vector random_state(Index dim, Rng& rng);

}  // namespace wwk
