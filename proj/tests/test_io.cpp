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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "qflip/io.hpp"
#include "qflip/optimize.hpp"

using namespace qflip;

namespace {

RunRecord sample_record() {
  RunRecord r;
  r.player = Player::kBob;
  r.n = 2;
  r.J = 4.104690605634817;
  r.T = 1.0;
  r.pulses_per_move = 3;
  r.restarts = 5;
  r.seed = 17;
  r.payoff = 0.75;
  r.controls = {{1, 0, Axis::kZ, 1.5},
                {1, 1, Axis::kY, -2.25},
                {1, 2, Axis::kZ, 0.125}};
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("player names round-trip and reject junk") {
  CHECK(player_name(Player::kAlice) == "alice");
  CHECK(player_name(Player::kBob) == "bob");
  CHECK(parse_player("alice") == Player::kAlice);
  CHECK(parse_player("bob") == Player::kBob);
  CHECK_THROWS(parse_player("carol"));
  CHECK_THROWS(parse_player("Alice"));
}

TEST_CASE("json serialization is stable byte for byte") {
  const std::string text = to_json(sample_record());
  const std::string expected = R"({
  "schema_version": 1,
  "player": "bob",
  "n": 2,
  "J": 4.104690605634817,
  "T": 1.0,
  "pulses_per_move": 3,
  "restarts": 5,
  "seed": 17,
  "payoff": 0.75,
  "controls": [
    {
      "move": 1,
      "index": 0,
      "axis": "z",
      "amplitude": 1.5
    },
    {
      "move": 1,
      "index": 1,
      "axis": "y",
      "amplitude": -2.25
    },
    {
      "move": 1,
      "index": 2,
      "axis": "z",
      "amplitude": 0.125
    }
  ]
}
)";
  CHECK(text == expected);
}

TEST_CASE("parse inverts serialization exactly") {
  const RunRecord r = sample_record();
  const RunRecord back = parse_record(to_json(r));
  CHECK(back.schema_version == r.schema_version);
  CHECK(back.player == r.player);
  CHECK(back.n == r.n);
  CHECK(back.J == r.J);  // exact: shortest round-trip representation
  CHECK(back.T == r.T);
  CHECK(back.pulses_per_move == r.pulses_per_move);
  CHECK(back.restarts == r.restarts);
  CHECK(back.seed == r.seed);
  CHECK(back.payoff == r.payoff);
  REQUIRE(back.controls.size() == r.controls.size());
  for (std::size_t i = 0; i < r.controls.size(); ++i) {
    CHECK(back.controls[i].move == r.controls[i].move);
    CHECK(back.controls[i].index == r.controls[i].index);
    CHECK(back.controls[i].axis == r.controls[i].axis);
    CHECK(back.controls[i].amplitude == r.controls[i].amplitude);
  }
  // Re-serialization is byte-identical.
  CHECK(to_json(back) == to_json(r));
}

TEST_CASE("malformed records are rejected with diagnostics") {
  const RunRecord r = sample_record();
  CHECK_THROWS_AS(parse_record("not json at all"), std::runtime_error);
  CHECK_THROWS_AS(parse_record("{}"), std::runtime_error);

  std::string text = to_json(r);
  SUBCASE("wrong schema version") {
    text.replace(text.find("\"schema_version\": 1"),
                 std::string("\"schema_version\": 1").size(),
                 "\"schema_version\": 2");
    CHECK_THROWS_AS(parse_record(text), std::runtime_error);
  }
  SUBCASE("unknown player") {
    text.replace(text.find("\"bob\""), 5, "\"eve\"");
    CHECK_THROWS_AS(parse_record(text), std::runtime_error);
  }
  SUBCASE("unknown axis") {
    text.replace(text.find("\"axis\": \"y\""),
                 std::string("\"axis\": \"y\"").size(), "\"axis\": \"x\"");
    CHECK_THROWS_AS(parse_record(text), std::runtime_error);
  }
  SUBCASE("control list shorter than the declared shape") {
    const std::size_t last = text.rfind(",\n    {");
    const std::size_t end = text.rfind("}\n  ]");
    text = text.substr(0, last) + text.substr(end + 1);
    CHECK_THROWS_AS(parse_record(text), std::runtime_error);
  }
  SUBCASE("move number out of range for bob") {
    text.replace(text.find("\"move\": 1"), std::string("\"move\": 1").size(),
                 "\"move\": 2");
    CHECK_THROWS_AS(parse_record(text), std::runtime_error);
  }
  SUBCASE("duplicate slot") {
    text.replace(text.find("\"index\": 1"), std::string("\"index\": 1").size(),
                 "\"index\": 0");
    CHECK_THROWS_AS(record_sequences(parse_record(text)), std::runtime_error);
  }
}

TEST_CASE("record sequences rebuild per-move pulse lists in slot order") {
  RunRecord r = sample_record();
  std::swap(r.controls[0], r.controls[2]);  // storage order must not matter
  const std::vector<ControlSequence> seqs = record_sequences(r);
  REQUIRE(seqs.size() == 1);
  REQUIRE(seqs[0].size() == 3);
  CHECK(seqs[0].pulses[0].amplitude == 1.5);
  CHECK(seqs[0].pulses[1].amplitude == -2.25);
  CHECK(seqs[0].pulses[2].amplitude == 0.125);
  CHECK(seqs[0].pulses[0].axis == Axis::kZ);
  CHECK(seqs[0].pulses[1].axis == Axis::kY);

  // Alice stores two moves of pulses_per_move slots each.
  RunRecord alice = sample_record();
  alice.player = Player::kAlice;
  alice.controls = {{1, 0, Axis::kZ, 0.1}, {1, 1, Axis::kY, 0.2},
                    {1, 2, Axis::kZ, 0.3}, {2, 0, Axis::kZ, 0.4},
                    {2, 1, Axis::kY, 0.5}, {2, 2, Axis::kZ, 0.6}};
  const std::vector<ControlSequence> two = record_sequences(alice);
  REQUIRE(two.size() == 2);
  CHECK(two[1].pulses[0].amplitude == 0.4);
}

TEST_CASE("records built from optimization results replay to their payoff") {
  ChainConfig chain;
  chain.n = 2;
  chain.J = 4.104690605634817;
  chain.T = 1.0;
  for (Player player : {Player::kAlice, Player::kBob}) {
    const OptimizationProblem problem = make_problem(player, chain, 3);
    const OptimizationResult result = optimize(problem, 3, 2);
    const RunRecord record = make_record(problem, result, 3);
    CHECK(record.player == player);
    CHECK(record.payoff == result.best_payoff);
    CHECK(record.seed == 2);
    CHECK(static_cast<int>(record.controls.size()) ==
          variable_count(problem));
    CHECK(record.controls[0].axis == Axis::kZ);
    CHECK(record.controls[1].axis == Axis::kY);
    CHECK(replay_payoff(record) ==
          doctest::Approx(result.best_payoff).epsilon(1e-12));
    // Through a byte round-trip as well.
    CHECK(replay_payoff(parse_record(to_json(record))) ==
          doctest::Approx(result.best_payoff).epsilon(1e-12));
  }
}

TEST_CASE("csv rendering of payoff curves") {
  PayoffCurve curve;
  curve.samples = {{0.0, 0.5}, {4.104690605634817, 0.500000000001}};
  CHECK(curve_to_csv(curve) ==
        "J,bob_mean_payoff\n"
        "0.000000000000,0.500000000000\n"
        "4.104690605635,0.500000000001\n");
}

TEST_CASE("file io writes what it says and fails loudly") {
  const RunRecord r = sample_record();
  const std::string path = "io_test_run.json";
  write_json(path, r);
  CHECK(slurp(path) == to_json(r));
  const RunRecord back = read_record(path);
  CHECK(to_json(back) == to_json(r));
  std::remove(path.c_str());

  PayoffCurve curve;
  curve.samples = {{1.0, 0.625}};
  const std::string csv_path = "io_test_curve.csv";
  write_csv(csv_path, curve);
  CHECK(slurp(csv_path) == curve_to_csv(curve));
  std::remove(csv_path.c_str());

  CHECK_THROWS_AS(write_json("no_such_dir/run.json", r), std::runtime_error);
  CHECK_THROWS_AS(write_csv("no_such_dir/curve.csv", curve),
                  std::runtime_error);
  CHECK_THROWS_AS(read_record("no_such_file.json"), std::runtime_error);
}
