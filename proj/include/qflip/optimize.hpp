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
#include <vector>

#include "qflip/calibration.hpp"
#include "qflip/game.hpp"

namespace qflip {

enum class Player { kAlice, kBob };

// Maximize the player's mean payoff over pulse amplitudes. Alice optimizes
// both of her moves (2N variables) against Bob's four table moves; Bob
// optimizes his single move (N variables) against Alice's mixed pair. Pulse
// axes are fixed z-first alternating; amplitudes are the only variables.
struct OptimizationProblem {
  GameSpec spec;
  Player player = Player::kAlice;
  int pulses_per_move = 3;
  std::vector<Mat> opponent_moves;  // 4 unitaries on the chain
  Averaging averaging = Averaging::kIndependent;  // Alice's pair, Bob's view
};

// Opponent defaults to the calibration move table realized on this chain.
OptimizationProblem make_problem(Player player, const ChainConfig& chain,
                                 int pulses_per_move);

int variable_count(const OptimizationProblem& problem);

// Mean payoff of the optimizing player at the given amplitudes.
double objective(const OptimizationProblem& problem,
                 const Eigen::VectorXd& amplitudes);

// Exact gradient (spectral derivative of each pulse exponential, propagated
// through the game).
Eigen::VectorXd gradient(const OptimizationProblem& problem,
                         const Eigen::VectorXd& amplitudes);

// Fused evaluation; grad may be null to skip the derivative work.
double objective_and_gradient(const OptimizationProblem& problem,
                              const Eigen::VectorXd& amplitudes,
                              Eigen::VectorXd* grad);

// Same payoff evaluated from explicit sequences (1 for Bob, 2 for Alice);
// permits non-alternating axis patterns such as re-sliced moves.
double sequence_payoff(const OptimizationProblem& problem,
                       const std::vector<ControlSequence>& moves);

struct OptimizeOptions {
  int max_iterations = 1000;
  double gradient_tol = 1e-8;  // max-norm termination
  int threads = 0;             // 0 = hardware concurrency
};

struct OptimizationResult {
  Eigen::VectorXd best_amplitudes;
  double best_payoff = 0.0;
  int restarts_run = 0;
  int iterations = 0;           // iterations used by the winning restart
  double gradient_norm = 0.0;   // max-norm at the winning restart's end
  std::uint64_t seed = 0;
};

// Multi-start Polak-Ribiere(+) conjugate gradient with strong Wolfe line
// search (c1 = 1e-4, c2 = 0.1). Restart r draws its start uniformly from
// [-pi N / T, pi N / T] using Rng(seed + r), so the result is bit-identical
// for a given (problem, restarts, seed) regardless of thread count. Winner:
// highest payoff, ties to the lowest restart index.
OptimizationResult optimize(const OptimizationProblem& problem, int restarts,
                            std::uint64_t seed,
                            const OptimizeOptions& options = {});

struct SweepEntry {
  int length = 0;
  double best_payoff = 0.0;
};

// Bob's best payoff per chain length at fixed coupling (the n = 2 calibrated
// value is the conventional choice for J).
std::vector<SweepEntry> chain_sweep(const std::vector<int>& lengths,
                                    int pulses_per_move, int restarts,
                                    std::uint64_t seed, double J, double T,
                                    const OptimizeOptions& options = {});

}  // namespace qflip
