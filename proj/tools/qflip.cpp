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
//
// Command-line front end. Exit codes: 0 success, 2 usage/parse error,
// 3 I/O error, 4 no solution (failed design check, no fair coupling).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qflip/calibration.hpp"
#include "qflip/game.hpp"
#include "qflip/io.hpp"
#include "qflip/optimize.hpp"
#include "qflip/rng.hpp"
#include "qflip/strategy.hpp"

namespace {

using namespace qflip;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoSolution = 4;

// Raised for filesystem failures so main can map them to kExitIo.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a command has no answer (maps to kExitNoSolution).
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_triple(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad number \"" +
                                  item + "\"");
    }
  }
  if (values.size() != 3) {
    throw std::invalid_argument(std::string(what) +
                                " must be three comma-separated numbers");
  }
  return values;
}

double fair_default_coupling(double T) {
  const auto fair = find_fair_coupling(2, T);
  if (!fair) {
    throw NoSolution("no fair coupling found to use as default J");
  }
  return fair->J;
}

// ---- design-check ----------------------------------------------------------

struct DesignArgs {
  std::string set;
  double tol = 1e-12;
  std::uint64_t seed = 0;
};

int run_design_check(const DesignArgs& args) {
  double deviation = 0.0;
  if (args.set == "pauli") {
    deviation = is_unitary_design(pauli_strategy(), 1, args.tol).deviation;
  } else if (args.set.rfind("haar:", 0) == 0) {
    long samples = 0;
    try {
      samples = std::stol(args.set.substr(5));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad sample count in \"" + args.set + "\"");
    }
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    Rng rng(args.seed);
    Mat mean = Mat::Zero(4, 4);
    for (long s = 0; s < samples; ++s) {
      const Mat u = haar_su2(rng);
      mean += kron(u, u.conjugate());
    }
    mean /= static_cast<double>(samples);
    deviation = max_abs(mean - haar_moment_matrix());
  } else {
    throw std::invalid_argument("unknown set \"" + args.set +
                                "\" (expected pauli or haar:N)");
  }
  std::printf("max moment deviation: %.17g\n", deviation);
  const bool ok = deviation < args.tol;
  std::printf("within tolerance %.3g: %s\n", args.tol, ok ? "yes" : "no");
  return ok ? kExitOk : kExitNoSolution;
}

// ---- scan-j ----------------------------------------------------------------

struct ScanArgs {
  double j_min = 0.0;
  double j_max = 10.0;
  int steps = 101;
  int n = 2;
  double T = 1.0;
  std::string scale = "linear";
  std::string out;
};

int run_scan(const ScanArgs& args) {
  const GridScale scale =
      args.scale == "log" ? GridScale::kLog : GridScale::kLinear;
  const PayoffCurve curve =
      scan_coupling(args.j_min, args.j_max, args.steps, args.n, args.T, scale);
  if (args.out.empty()) {
    std::cout << curve_to_csv(curve);
  } else {
    try {
      write_csv(args.out, curve);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  }
  return kExitOk;
}

// ---- find-fair-j -----------------------------------------------------------

struct FairArgs {
  int n = 2;
  double T = 1.0;
  double tol = 1e-6;
};

int run_find_fair(const FairArgs& args) {
  if (args.tol <= 0) throw std::invalid_argument("--tol must be positive");
  FairSearch search;
  search.tol = args.tol;
  const auto fair = find_fair_coupling(args.n, args.T, search);
  if (!fair) {
    std::fprintf(stderr,
                 "no fair coupling: Bob's mean payoff minus 1/2 has no sign "
                 "change for J in [%g, %g] at n = %d, T = %g\n",
                 search.j_start, search.j_stop, args.n, args.T);
    return kExitNoSolution;
  }
  std::printf("%.6f\n", fair->J);
  return kExitOk;
}

// ---- optimize ----------------------------------------------------------------

struct OptArgs {
  std::string player;
  int n = 2;
  double J = 0.0;
  bool has_j = false;
  double T = 1.0;
  int pulses = 3;
  int restarts = 50;
  std::uint64_t seed = 0;
  std::string out;
};

int run_optimize(const OptArgs& args) {
  Player player;
  try {
    player = parse_player(args.player);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(e.what());
  }
  ChainConfig chain;
  chain.n = args.n;
  chain.T = args.T;
  chain.J = args.has_j ? args.J : fair_default_coupling(args.T);
  chain.validate();
  const OptimizationProblem problem =
      make_problem(player, chain, args.pulses);
  const OptimizationResult result =
      optimize(problem, args.restarts, args.seed);
  const RunRecord record = make_record(problem, result, args.restarts);
  if (args.out.empty()) {
    std::cout << to_json(record);
  } else {
    try {
      write_json(args.out, record);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
    std::printf("payoff = %.12f (%s, n = %d, N = %d) -> %s\n",
                record.payoff, player_name(player).c_str(), record.n,
                record.pulses_per_move, args.out.c_str());
  }
  return kExitOk;
}

// ---- play ------------------------------------------------------------------

int run_demo_meyer() {
  const double s = std::sqrt(0.5);
  Mat h(2, 2), xh(2, 2), keep(2, 2), flip(2, 2);
  h << s, s, s, -s;
  xh << s, -s, s, s;  // sigma_x * H
  keep << 1, 0, 0, 1;
  flip << 0, 1, 1, 0;
  std::printf("Alice move 1: H\n");
  std::printf("Bob move:     keep (1l) or flip (sigma_x)\n");
  std::printf("Alice move 2: sigma_x H\n");
  const double p_keep = play_unitary(h, keep, xh).p_alice;
  const double p_flip = play_unitary(h, flip, xh).p_alice;
  std::printf("  Bob keeps -> p_alice = %.12f\n", p_keep);
  std::printf("  Bob flips -> p_alice = %.12f\n", p_flip);
  std::printf("p_alice = %.12f\n", std::min(p_keep, p_flip));
  return kExitOk;
}

struct SingleArgs {
  std::string alice = "pauli";
  std::string bob = "pauli";
  std::string alice_move1;  // "phi,psi,theta"
  std::string alice_move2;
  std::string bob_move;
  std::string samples = "exhaustive";
  std::uint64_t seed = 0;
};

Mat euler_move(const std::string& text, const char* what) {
  const std::vector<double> v = parse_triple(text, what);
  return su2_from_euler(EulerAngles{v[0], v[1], v[2]});
}

// A single-qubit player's move distribution for one move slot.
struct MoveSpec {
  enum Kind { kFixed, kPauli, kHaar } kind = kPauli;
  Mat fixed;

  Mat draw(Rng& rng, const MixedStrategy& pauli) const {
    switch (kind) {
      case kFixed:
        return fixed;
      case kPauli: {
        const auto i = static_cast<std::size_t>(rng.uniform() * 4.0);
        return pauli.elements[std::min<std::size_t>(i, 3)];
      }
      case kHaar:
      default:
        return haar_su2(rng);
    }
  }
};

MoveSpec make_move_spec(const std::string& mixture,
                        const std::string& explicit_move, const char* what) {
  MoveSpec spec;
  if (!explicit_move.empty()) {
    spec.kind = MoveSpec::kFixed;
    spec.fixed = euler_move(explicit_move, what);
    return spec;
  }
  if (mixture == "pauli") {
    spec.kind = MoveSpec::kPauli;
  } else if (mixture == "haar") {
    spec.kind = MoveSpec::kHaar;
  } else {
    throw std::invalid_argument("unknown mixture \"" + mixture +
                                "\" (expected pauli or haar)");
  }
  return spec;
}

int run_play_single(const SingleArgs& args) {
  const MixedStrategy pauli = pauli_strategy();
  const MoveSpec a1 =
      make_move_spec(args.alice, args.alice_move1, "--alice-move1");
  const MoveSpec a2 =
      make_move_spec(args.alice, args.alice_move2, "--alice-move2");
  const MoveSpec b = make_move_spec(args.bob, args.bob_move, "--bob-move");

  double mean = 0.0;
  double std_error = 0.0;
  if (args.samples == "exhaustive") {
    const auto support = [&](const MoveSpec& spec)
        -> std::pair<std::vector<Mat>, std::vector<double>> {
      switch (spec.kind) {
        case MoveSpec::kFixed:
          return {{spec.fixed}, {1.0}};
        case MoveSpec::kPauli:
          return {pauli.elements, pauli.weights};
        case MoveSpec::kHaar:
        default:
          throw std::invalid_argument(
              "haar mixtures need a Monte Carlo sample count");
      }
    };
    const auto [s1, w1] = support(a1);
    const auto [sb, wb] = support(b);
    const auto [s2, w2] = support(a2);
    mean = mean_p_alice(initial_state(2), s1, w1, sb, wb, s2, w2);
  } else {
    long long samples = 0;
    try {
      samples = std::stoll(args.samples);
    } catch (const std::exception&) {
      throw std::invalid_argument("--samples must be a count or exhaustive");
    }
    if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
    Rng rng(args.seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long long s = 0; s < samples; ++s) {
      const Mat u1 = a1.draw(rng, pauli);
      const Mat u2 = a2.draw(rng, pauli);
      const Mat ub = b.draw(rng, pauli);
      const double p = play_unitary(u1, ub, u2).p_alice;
      sum += p;
      sum_sq += p * p;
    }
    const double k = static_cast<double>(samples);
    mean = sum / k;
    if (samples > 1) {
      const double var = std::max(0.0, (sum_sq - k * mean * mean) / (k - 1));
      std_error = std::sqrt(var / k);
    }
  }
  std::printf("p_alice = %.12f\n", mean);
  std::printf("p_bob = %.12f\n", 1.0 - mean);
  std::printf("std_error = %.12f\n", std_error);
  return kExitOk;
}

struct PlayChainArgs {
  int n = 0;  // 0: take the record's value (or 2 without a record)
  double J = 0.0;
  bool has_j = false;
  double T = 0.0;  // 0: record's value or 1
  std::string controls;
  std::string a1, b, a2;  // xi triples, compiled at (3/T) amplitude
};

int run_play_chain(const PlayChainArgs& args) {
  if (!args.controls.empty()) {
    const std::string text = read_file(args.controls);
    RunRecord record = parse_record(text);  // throws runtime_error -> usage
    if (args.n > 0) record.n = args.n;
    if (args.has_j) record.J = args.J;
    if (args.T > 0) record.T = args.T;
    const double replayed = replay_payoff(record);
    std::printf("player = %s\n", player_name(record.player).c_str());
    std::printf("stored_payoff = %.12f\n", record.payoff);
    std::printf("replayed_payoff = %.12f\n", replayed);
    return kExitOk;
  }
  if (args.a1.empty() || args.b.empty() || args.a2.empty()) {
    throw std::invalid_argument(
        "chain mode needs --controls or all of --a1/--b/--a2");
  }
  GameSpec spec;
  spec.chain.n = args.n > 0 ? args.n : 2;
  spec.chain.T = args.T > 0 ? args.T : 1.0;
  spec.chain.J = args.has_j ? args.J : fair_default_coupling(spec.chain.T);
  spec.chain.validate();
  const auto seq = [&](const std::string& text, const char* what) {
    const std::vector<double> v = parse_triple(text, what);
    return params_to_sequence({v[0], v[1], v[2]}, spec.chain.T);
  };
  const PayoffResult r =
      play_chain(spec, seq(args.a1, "--a1"), seq(args.b, "--b"),
                 seq(args.a2, "--a2"));
  std::printf("p_alice = %.12f\n", r.p_alice);
  std::printf("p_bob = %.12f\n", r.p_bob);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum penny-flip game on a Heisenberg spin chain: design checks, "
      "fairness calibration, pulse optimization, and game playback"};
  app.require_subcommand(1);

  DesignArgs design_args;
  auto* design = app.add_subcommand(
      "design-check", "Verify a strategy set against the Haar first moment");
  design->add_option("--set", design_args.set,
                     "Strategy set: pauli or haar:N (N Monte Carlo draws)")
      ->required();
  design->add_option("--tol", design_args.tol, "Max allowed moment deviation")
      ->capture_default_str();
  design->add_option("--seed", design_args.seed, "Seed for haar:N draws")
      ->capture_default_str();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand(
      "scan-j", "Tabulate Bob's mean payoff against the coupling J");
  scan->add_option("--min", scan_args.j_min, "Smallest J")->required();
  scan->add_option("--max", scan_args.j_max, "Largest J")->required();
  scan->add_option("--steps", scan_args.steps, "Number of grid points")
      ->required();
  scan->add_option("--n", scan_args.n, "Chain length")->capture_default_str();
  scan->add_option("--T", scan_args.T, "Move duration")->capture_default_str();
  scan->add_option("--scale", scan_args.scale, "Grid spacing")
      ->capture_default_str()
      ->check(CLI::IsMember({"linear", "log"}));
  scan->add_option("--out", scan_args.out, "CSV path (default: stdout)");

  FairArgs fair_args;
  auto* fair = app.add_subcommand(
      "find-fair-j", "Find the coupling where Bob's mean payoff is 1/2");
  fair->add_option("--n", fair_args.n, "Chain length")->capture_default_str();
  fair->add_option("--T", fair_args.T, "Move duration")->capture_default_str();
  fair->add_option("--tol", fair_args.tol, "Bisection bracket width")
      ->capture_default_str();

  OptArgs opt_args;
  auto* opt = app.add_subcommand(
      "optimize", "Maximize a player's mean payoff over pulse amplitudes");
  opt->add_option("--player", opt_args.player, "alice or bob")->required();
  opt->add_option("--n", opt_args.n, "Chain length")->capture_default_str();
  auto* opt_j = opt->add_option(
      "--J", opt_args.J, "Coupling (default: fair value calibrated at n = 2)");
  opt->add_option("--T", opt_args.T, "Move duration")->capture_default_str();
  opt->add_option("--N", opt_args.pulses, "Pulses per move")
      ->capture_default_str();
  opt->add_option("--restarts", opt_args.restarts, "Optimizer restarts")
      ->capture_default_str();
  opt->add_option("--seed", opt_args.seed, "Base seed")->capture_default_str();
  opt->add_option("--out", opt_args.out, "Result JSON path (default: stdout)");

  auto* play = app.add_subcommand("play", "Play games and replay solutions");
  play->require_subcommand(1);
  auto* demo = play->add_subcommand(
      "demo-meyer", "Alice's perfect single-qubit cheat against a classical Bob");
  (void)demo;

  SingleArgs single_args;
  auto* single = play->add_subcommand(
      "single", "Ideal single-qubit game with mixed or explicit moves");
  single->add_option("--alice", single_args.alice,
                     "Alice's mixture: pauli or haar")
      ->capture_default_str();
  single->add_option("--bob", single_args.bob, "Bob's mixture: pauli or haar")
      ->capture_default_str();
  single->add_option("--alice-move1", single_args.alice_move1,
                     "Explicit first move as Euler angles phi,psi,theta");
  single->add_option("--alice-move2", single_args.alice_move2,
                     "Explicit second move as Euler angles phi,psi,theta");
  single->add_option("--bob-move", single_args.bob_move,
                     "Explicit Bob move as Euler angles phi,psi,theta");
  single->add_option("--samples", single_args.samples,
                     "exhaustive or a Monte Carlo sample count")
      ->capture_default_str();
  single->add_option("--seed", single_args.seed, "Monte Carlo seed")
      ->capture_default_str();

  PlayChainArgs chain_args;
  auto* chain = play->add_subcommand(
      "chain", "Spin-chain game from a controls file or explicit parameters");
  chain->add_option("--n", chain_args.n, "Chain length override");
  auto* chain_j = chain->add_option("--J", chain_args.J, "Coupling override");
  chain->add_option("--T", chain_args.T, "Move duration override");
  chain->add_option("--controls", chain_args.controls,
                    "Result JSON to replay against the reference mixture");
  chain->add_option("--a1", chain_args.a1,
                    "Alice move 1 as xi1,xi2,xi3 control parameters");
  chain->add_option("--b", chain_args.b,
                    "Bob move as xi1,xi2,xi3 control parameters");
  chain->add_option("--a2", chain_args.a2,
                    "Alice move 2 as xi1,xi2,xi3 control parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  opt_args.has_j = opt_j->count() > 0;
  chain_args.has_j = chain_j->count() > 0;

  try {
    if (design->parsed()) return run_design_check(design_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (fair->parsed()) return run_find_fair(fair_args);
    if (opt->parsed()) return run_optimize(opt_args);
    if (play->parsed()) {
      if (demo->parsed()) return run_demo_meyer();
      if (single->parsed()) return run_play_single(single_args);
      if (chain->parsed()) return run_play_chain(chain_args);
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const NoSolution& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNoSolution;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
