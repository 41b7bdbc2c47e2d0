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

#include <vector>

#include "qflip/linalg.hpp"

namespace qflip {

// Spin chain with isotropic nearest-neighbour exchange J (open boundary),
// local y/z controls on the first spin only, moves of fixed duration T.
struct ChainConfig {
  int n = 2;       // chain length, 1..7 (n = 1 has no drift; J is ignored)
  double J = 0.0;  // exchange coupling
  double T = 1.0;  // duration of one move

  void validate() const;  // throws std::invalid_argument
  Eigen::Index dim() const { return Eigen::Index(1) << n; }
};

enum class Axis { kY, kZ };

inline char axis_name(Axis a) { return a == Axis::kY ? 'y' : 'z'; }

struct ControlPulse {
  Axis axis = Axis::kZ;
  double amplitude = 0.0;
};

// One move: N pulses of equal duration T/N. The canonical sequences alternate
// axes starting from z (see alternating_sequence); the container itself allows
// arbitrary axis patterns so that re-slicings of a move (e.g. each pulse split
// into two half-duration copies) can be represented and evaluated.
struct ControlSequence {
  std::vector<ControlPulse> pulses;

  int size() const { return static_cast<int>(pulses.size()); }
};

// z, y, z, y, ... (or y-first) with the given amplitudes.
ControlSequence alternating_sequence(const std::vector<double>& amplitudes,
                                     Axis first = Axis::kZ);

// sigma_axis acting on spin 1, identity elsewhere (amplitude 1).
Mat control_operator(const ChainConfig& config, Axis axis);

// J * sum_k (sx sx + sy sy + sz sz) over nearest neighbours; zero for n = 1.
Mat drift_hamiltonian(const ChainConfig& config);

Mat control_hamiltonian(const ChainConfig& config, const ControlPulse& pulse);

// U = prod_{k=N-1..0} exp(-i dt (H0 + H_c(pulse_k))), pulse 0 applied first.
Mat evolve_move(const ChainConfig& config, const ControlSequence& seq);

}  // namespace qflip
