// Copyright 2026 The wavelearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Database of classical orthonormal scaling filters: Haar, Daubechies 2-10,
// Symlets 2-10 and Coiflets 1-5. Normalization is ||h||_2 = 1, sum(h) =
// sqrt(2).

#ifndef WAVELEARN_CLASSICAL_HPP_
#define WAVELEARN_CLASSICAL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wavelearn/filterbank.hpp"

namespace wavelearn {

enum class WaveletFamily { kHaar, kDaubechies, kSymlet, kCoiflet };

struct ClassicalWaveletId {
  WaveletFamily family = WaveletFamily::kHaar;
  int order = 1;

  friend auto operator<=>(const ClassicalWaveletId&,
                          const ClassicalWaveletId&) = default;
};

bool IsValid(const ClassicalWaveletId& id);

// Short name: "haar", "db4", "sym5", "coif2".
std::string ShortName(const ClassicalWaveletId& id);
// "Haar", "Daubechies", "Symlet", "Coiflet".
std::string_view FamilyName(WaveletFamily family);

// Parses a short name. Throws LookupError on unknown names.
ClassicalWaveletId ParseWaveletName(std::string_view name);

// Throws LookupError for combinations outside the database.
ScalingFilter ClassicalFilter(const ClassicalWaveletId& id);

// All 24 entries in family order, ascending order within a family.
const std::vector<ClassicalWaveletId>& ClassicalWaveletIds();

}  // namespace wavelearn

#endif  // WAVELEARN_CLASSICAL_HPP_
