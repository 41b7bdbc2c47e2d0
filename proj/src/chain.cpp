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

#include "qflip/chain.hpp"

#include <stdexcept>

namespace qflip {

void ChainConfig::validate() const {
  if (n < 1 || n > 7)
    throw std::invalid_argument("ChainConfig: n must be in 1..7");
  if (!(T > 0.0))
    throw std::invalid_argument("ChainConfig: T must be positive");
}

ControlSequence alternating_sequence(const std::vector<double>& amplitudes,
                                     Axis first) {
  if (amplitudes.empty())
    throw std::invalid_argument("alternating_sequence: need at least 1 pulse");
  ControlSequence seq;
  seq.pulses.reserve(amplitudes.size());
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    const bool even = (k % 2 == 0);
    const Axis axis = (first == Axis::kZ) == even ? Axis::kZ : Axis::kY;
    seq.pulses.push_back({axis, amplitudes[k]});
  }
  return seq;
}

Mat control_operator(const ChainConfig& config, Axis axis) {
  config.validate();
  const Mat s = pauli(axis_name(axis));
  if (config.n == 1) return s;
  return kron(s, identity(config.dim() / 2));
}

Mat drift_hamiltonian(const ChainConfig& config) {
  config.validate();
  const Eigen::Index dim = config.dim();
  Mat h = Mat::Zero(dim, dim);
  if (config.n == 1) return h;
  for (int k = 0; k + 1 < config.n; ++k) {
    for (char ax : {'x', 'y', 'z'}) {
      const Mat s = pauli(ax);
      Mat term = identity(1);
      for (int q = 0; q < config.n; ++q)
        term = kron(term, (q == k || q == k + 1) ? s : identity(2));
      h += term;
    }
  }
  return config.J * h;
}

Mat control_hamiltonian(const ChainConfig& config, const ControlPulse& pulse) {
  return pulse.amplitude * control_operator(config, pulse.axis);
}

Mat evolve_move(const ChainConfig& config, const ControlSequence& seq) {
  config.validate();
  if (seq.pulses.empty())
    throw std::invalid_argument("evolve_move: empty control sequence");
  const double dt = config.T / seq.size();
  const Mat h0 = drift_hamiltonian(config);
  Mat u = identity(config.dim());
  for (const ControlPulse& pulse : seq.pulses)
    u = expm_hermitian(h0 + control_hamiltonian(config, pulse), dt) * u;
  return u;
}

}  // namespace qflip
