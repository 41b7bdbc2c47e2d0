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

#include "qflip/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qflip {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string axis_token(Axis axis) { return axis == Axis::kY ? "y" : "z"; }

Axis parse_axis(const std::string& token) {
  if (token == "y") return Axis::kY;
  if (token == "z") return Axis::kZ;
  throw std::runtime_error("unknown pulse axis \"" + token + "\"");
}

const ordered_json& require(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::runtime_error(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

}  // namespace

std::string player_name(Player player) {
  return player == Player::kAlice ? "alice" : "bob";
}

Player parse_player(const std::string& name) {
  if (name == "alice") return Player::kAlice;
  if (name == "bob") return Player::kBob;
  throw std::runtime_error("unknown player \"" + name + "\"");
}

RunRecord make_record(const OptimizationProblem& problem,
                      const OptimizationResult& result, int restarts) {
  const ChainConfig& chain = problem.spec.chain;
  RunRecord record;
  record.player = problem.player;
  record.n = chain.n;
  record.J = chain.J;
  record.T = chain.T;
  record.pulses_per_move = problem.pulses_per_move;
  record.restarts = restarts;
  record.seed = result.seed;
  record.payoff = result.best_payoff;
  const int moves = problem.player == Player::kAlice ? 2 : 1;
  const int n = problem.pulses_per_move;
  for (int m = 0; m < moves; ++m) {
    for (int k = 0; k < n; ++k) {
      StoredPulse pulse;
      pulse.move = m + 1;
      pulse.index = k;
      pulse.axis = k % 2 == 0 ? Axis::kZ : Axis::kY;
      pulse.amplitude = result.best_amplitudes[m * n + k];
      record.controls.push_back(pulse);
    }
  }
  return record;
}

std::string to_json(const RunRecord& record) {
  ordered_json j;
  j["schema_version"] = record.schema_version;
  j["player"] = player_name(record.player);
  j["n"] = record.n;
  j["J"] = record.J;
  j["T"] = record.T;
  j["pulses_per_move"] = record.pulses_per_move;
  j["restarts"] = record.restarts;
  j["seed"] = record.seed;
  j["payoff"] = record.payoff;
  ordered_json controls = ordered_json::array();
  for (const StoredPulse& p : record.controls) {
    ordered_json entry;
    entry["move"] = p.move;
    entry["index"] = p.index;
    entry["axis"] = axis_token(p.axis);
    entry["amplitude"] = p.amplitude;
    controls.push_back(std::move(entry));
  }
  j["controls"] = std::move(controls);
  return j.dump(2) + "\n";
}

void write_json(const std::string& path, const RunRecord& record) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << to_json(record);
  if (!out.flush()) throw std::runtime_error("write to \"" + path + "\" failed");
}

RunRecord parse_record(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("control JSON parse error: ") +
                             e.what());
  }
  if (!j.is_object()) throw std::runtime_error("control JSON is not an object");
  RunRecord record;
  record.schema_version = require(j, "schema_version").get<int>();
  if (record.schema_version != 1) {
    throw std::runtime_error("unsupported schema_version");
  }
  record.player = parse_player(require(j, "player").get<std::string>());
  record.n = require(j, "n").get<int>();
  record.J = require(j, "J").get<double>();
  record.T = require(j, "T").get<double>();
  record.pulses_per_move = require(j, "pulses_per_move").get<int>();
  record.restarts = require(j, "restarts").get<int>();
  record.seed = require(j, "seed").get<std::uint64_t>();
  record.payoff = require(j, "payoff").get<double>();
  const ordered_json& controls = require(j, "controls");
  if (!controls.is_array()) {
    throw std::runtime_error("\"controls\" must be an array");
  }
  const int moves = record.player == Player::kAlice ? 2 : 1;
  const int n = record.pulses_per_move;
  if (n < 1) throw std::runtime_error("pulses_per_move must be positive");
  if (static_cast<int>(controls.size()) != moves * n) {
    throw std::runtime_error("controls array has the wrong length");
  }
  for (const ordered_json& entry : controls) {
    StoredPulse pulse;
    pulse.move = require(entry, "move").get<int>();
    pulse.index = require(entry, "index").get<int>();
    pulse.axis = parse_axis(require(entry, "axis").get<std::string>());
    pulse.amplitude = require(entry, "amplitude").get<double>();
    if (pulse.move < 1 || pulse.move > moves) {
      throw std::runtime_error("pulse move number out of range");
    }
    if (pulse.index < 0 || pulse.index >= n) {
      throw std::runtime_error("pulse index out of range");
    }
    record.controls.push_back(pulse);
  }
  return record;
}

RunRecord read_record(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_record(buf.str());
}

std::vector<ControlSequence> record_sequences(const RunRecord& record) {
  const int moves = record.player == Player::kAlice ? 2 : 1;
  const int n = record.pulses_per_move;
  std::vector<ControlSequence> out(moves);
  std::vector<std::vector<char>> seen(moves, std::vector<char>(n, 0));
  for (auto& seq : out) seq.pulses.resize(n);
  for (const StoredPulse& p : record.controls) {
    char& slot = seen[p.move - 1][p.index];
    if (slot) throw std::runtime_error("duplicate pulse slot in controls");
    slot = 1;
    out[p.move - 1].pulses[p.index] = ControlPulse{p.axis, p.amplitude};
  }
  for (const auto& move : seen) {
    for (char s : move) {
      if (!s) throw std::runtime_error("missing pulse slot in controls");
    }
  }
  return out;
}

double replay_payoff(const RunRecord& record) {
  ChainConfig chain;
  chain.n = record.n;
  chain.J = record.J;
  chain.T = record.T;
  chain.validate();
  const OptimizationProblem problem =
      make_problem(record.player, chain, record.pulses_per_move);
  return sequence_payoff(problem, record_sequences(record));
}

std::string curve_to_csv(const PayoffCurve& curve) {
  std::string out = "J,bob_mean_payoff\n";
  char row[64];
  for (const auto& [J, p_bob] : curve.samples) {
    std::snprintf(row, sizeof(row), "%.12f,%.12f\n", J, p_bob);
    out += row;
  }
  return out;
}

void write_csv(const std::string& path, const PayoffCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << curve_to_csv(curve);
  if (!out.flush()) throw std::runtime_error("write to \"" + path + "\" failed");
}

}  // namespace qflip
