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

#include "qflip/chain.hpp"
#include "qflip/linalg.hpp"
#include "qflip/strategy.hpp"

namespace qflip {

// Coin-flip game on the chain: state starts in |0...0>, Alice moves, Bob
// moves, Alice moves, then the first spin is measured. Alice wins on |1>.
struct GameSpec {
  ChainConfig chain;
};

struct PayoffResult {
  double p_alice = 0.0;
  double p_bob = 0.0;
};

// <sigma_z> of the measured spin, derived from the win probability.
inline double sigma_z_expectation(const PayoffResult& r) {
  return 1.0 - 2.0 * r.p_alice;
}

enum class CoinMove { kKeep, kFlip };

// Alice's payoff (+1 Alice wins, -1 Bob wins) for the classical three-move
// coin game; the coin starts heads up and Alice wants tails, so she wins
// exactly when the number of flips is odd.
int classical_payoff(CoinMove a1, CoinMove b, CoinMove a2);

// |0...0> of the given dimension.
Vec initial_state(Eigen::Index dim);

// Probability that the first spin measures |1>.
double p_alice_of_state(const Vec& psi);

// Ideal single-qubit game. All inputs must be 2x2 unitary (throws otherwise).
PayoffResult play_unitary(const Mat& u_a1, const Mat& u_b, const Mat& u_a2);

// Chain game: psi_f = U(a2) U(b) U(a1) |0...0>, measurement on spin 1 via the
// reduced density matrix.
PayoffResult play_chain(const GameSpec& spec, const ControlSequence& a1,
                        const ControlSequence& b, const ControlSequence& a2);

// Mean p_alice when each move is drawn independently from a finite support.
// Singleton supports express fixed moves. All matrices must match dim(psi0).
double mean_p_alice(const Vec& psi0, const std::vector<Mat>& a1_set,
                    const std::vector<double>& a1_w,
                    const std::vector<Mat>& b_set,
                    const std::vector<double>& b_w,
                    const std::vector<Mat>& a2_set,
                    const std::vector<double>& a2_w);

// Ideal single-qubit game with fixed Alice moves against a mixed Bob.
double mean_p_alice_unitary(const Mat& u_a1, const Mat& u_a2,
                            const MixedStrategy& bob);

}  // namespace qflip
