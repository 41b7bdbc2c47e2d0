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

#include <optional>
#include <utility>
#include <vector>

#include "qflip/game.hpp"

namespace qflip {

// How Alice's two moves are drawn when both players play the mixed pulse
// strategy. Independent (4 x 4 pairs, 64 joint games with Bob) is the
// convention under which the standard fair coupling 4.10469... is the root;
// correlated reuses one draw for both of her moves (4 pairs, 16 games).
enum class Averaging { kIndependent, kCorrelated };

// Mean Bob payoff at coupling J when every move is drawn from the
// calibration move table realized on the chain.
double bob_payoff_at(int n, double J, double T,
                     Averaging avg = Averaging::kIndependent);

struct PayoffCurve {
  std::vector<std::pair<double, double>> samples;  // (J, mean Bob payoff)
};

enum class GridScale { kLinear, kLog };

// Uniform (or log-uniform) grid of bob_payoff_at over [j_min, j_max].
// steps >= 2; log scale requires j_min > 0.
PayoffCurve scan_coupling(double j_min, double j_max, int steps, int n,
                          double T, GridScale scale = GridScale::kLinear,
                          Averaging avg = Averaging::kIndependent);

struct FairSearch {
  double j_start = 0.1;       // coarse scan starts here ...
  double j_stop = 20.0;       // ... and gives up here
  double coarse_step = 0.05;  // must not skip the first crossing
  double tol = 1e-6;          // final bracket width
};

struct FairCoupling {
  double J = 0.0;  // bracket midpoint
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// Smallest J > 0 with mean Bob payoff 1/2: coarse scan locates the first
// sign change of p_bob - 1/2, bisection refines it to |bracket| < tol.
// Empty when no sign change occurs on [j_start, j_stop].
std::optional<FairCoupling> find_fair_coupling(
    int n, double T, const FairSearch& search = {},
    Averaging avg = Averaging::kIndependent);

}  // namespace qflip
