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

#include <stdexcept>

namespace wwk {

// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed caller input: unreadable file, bad schema, broken normalization.
struct InvalidInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

// Conditioning on a detection event whose amplitude vanishes identically.
struct DegenerateProjection : Error {
  using Error::Error;
};

// Path knowledge is undefined at phases where nothing is ever detected.
struct UndefinedAtPhase : Error {
  using Error::Error;
};

// Detector states too close to collinear for a basis construction that
// divides by 1 - |<chi_a|chi_b>|.
struct OverlapTooClose : Error {
  using Error::Error;
};

}  // namespace wwk
