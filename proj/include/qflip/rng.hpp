// Copyright 2026 The qflip Authors
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

#include <cstdint>
#include <random>

namespace qflip {

// Deterministic random source. The seed -> sequence map is stable across
// platforms: the engine is the standardized 64-bit Mersenne Twister
// (mt19937_64) and uniform doubles are formed as (x >> 11) * 2^-53, i.e. the
// top 53 bits of each raw draw, giving values in [0, 1). Distribution
// adaptors from <random> are deliberately avoided because their output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qflip
