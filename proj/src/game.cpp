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

#include "qflip/game.hpp"

#include <stdexcept>

namespace qflip {

int classical_payoff(CoinMove a1, CoinMove b, CoinMove a2) {
  const int flips = (a1 == CoinMove::kFlip) + (b == CoinMove::kFlip) +
                    (a2 == CoinMove::kFlip);
  return flips % 2 == 1 ? 1 : -1;
}

Vec initial_state(Eigen::Index dim) {
  Vec psi = Vec::Zero(dim);
  psi(0) = 1.0;
  return psi;
}

double p_alice_of_state(const Vec& psi) {
  const Eigen::Index half = psi.size() / 2;
  return psi.tail(half).squaredNorm();
}

PayoffResult play_unitary(const Mat& u_a1, const Mat& u_b, const Mat& u_a2) {
  for (const Mat* u : {&u_a1, &u_b, &u_a2})
    if (u->rows() != 2 || !is_unitary(*u))
      throw std::invalid_argument("play_unitary: moves must be 2x2 unitary");
  const Vec psi = u_a2 * (u_b * (u_a1 * initial_state(2)));
  const double p = p_alice_of_state(psi);
  return {p, 1.0 - p};
}

PayoffResult play_chain(const GameSpec& spec, const ControlSequence& a1,
                        const ControlSequence& b, const ControlSequence& a2) {
  const Mat u1 = evolve_move(spec.chain, a1);
  const Mat ub = evolve_move(spec.chain, b);
  const Mat u2 = evolve_move(spec.chain, a2);
  const Vec psi = u2 * (ub * (u1 * initial_state(spec.chain.dim())));
  // p_alice = <1| tr_rest(|psi><psi|) |1>; for a pure state this is just the
  // weight of the upper block, but go through the reduced matrix to keep the
  // measurement definition in one place.
  const Mat rho = partial_trace_keep_first(Mat(psi * psi.adjoint()));
  const double p = rho(1, 1).real();
  return {p, 1.0 - p};
}

double mean_p_alice(const Vec& psi0, const std::vector<Mat>& a1_set,
                    const std::vector<double>& a1_w,
                    const std::vector<Mat>& b_set,
                    const std::vector<double>& b_w,
                    const std::vector<Mat>& a2_set,
                    const std::vector<double>& a2_w) {
  if (a1_set.size() != a1_w.size() || b_set.size() != b_w.size() ||
      a2_set.size() != a2_w.size())
    throw std::invalid_argument("mean_p_alice: support/weight size mismatch");
  double mean = 0.0;
  for (std::size_t i = 0; i < a1_set.size(); ++i) {
    const Vec after1 = a1_set[i] * psi0;
    for (std::size_t j = 0; j < b_set.size(); ++j) {
      const Vec after2 = b_set[j] * after1;
      for (std::size_t k = 0; k < a2_set.size(); ++k)
        mean += a1_w[i] * b_w[j] * a2_w[k] *
                p_alice_of_state(Vec(a2_set[k] * after2));
    }
  }
  return mean;
}

double mean_p_alice_unitary(const Mat& u_a1, const Mat& u_a2,
                            const MixedStrategy& bob) {
  bob.validate();
  double mean = 0.0;
  for (std::size_t j = 0; j < bob.elements.size(); ++j)
    mean += bob.weights[j] *
            play_unitary(u_a1, bob.elements[j], u_a2).p_alice;
  return mean;
}

}  // namespace qflip
