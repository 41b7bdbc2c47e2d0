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
#include <string>
#include <vector>

#include "qflip/calibration.hpp"
#include "qflip/optimize.hpp"

namespace qflip {

std::string player_name(Player player);
Player parse_player(const std::string& name);  // throws on unknown name

// One pulse of a stored run: `move` is 1-based (Alice plays moves 1 and 2,
// Bob only move 1), `index` is the 0-based slot within the move.
struct StoredPulse {
  int move = 1;
  int index = 0;
  Axis axis = Axis::kZ;
  double amplitude = 0.0;
};

// Everything needed to replay an optimization run.
struct RunRecord {
  int schema_version = 1;
  Player player = Player::kAlice;
  int n = 2;
  double J = 0.0;
  double T = 1.0;
  int pulses_per_move = 3;
  int restarts = 0;
  std::uint64_t seed = 0;
  double payoff = 0.0;
  std::vector<StoredPulse> controls;
};

RunRecord make_record(const OptimizationProblem& problem,
                      const OptimizationResult& result, int restarts);

// Serialized with keys in the documented order; ends with a newline.
std::string to_json(const RunRecord& record);
void write_json(const std::string& path, const RunRecord& record);

// Parse/shape errors throw std::runtime_error with a diagnostic.
RunRecord parse_record(const std::string& text);
RunRecord read_record(const std::string& path);

// Per-move sequences reassembled from the control list (index order).
std::vector<ControlSequence> record_sequences(const RunRecord& record);

// Replays the stored controls against the default opponent mixture.
double replay_payoff(const RunRecord& record);

// Header `J,bob_mean_payoff`, one `%.12f` pair per row, LF endings.
std::string curve_to_csv(const PayoffCurve& curve);
void write_csv(const std::string& path, const PayoffCurve& curve);

}  // namespace qflip
