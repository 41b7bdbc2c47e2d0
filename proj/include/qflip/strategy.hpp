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

#include <array>
#include <vector>

#include "qflip/chain.hpp"
#include "qflip/linalg.hpp"
#include "qflip/rng.hpp"

namespace qflip {

// Finite mixed strategy: unitaries drawn with the given probabilities.
struct MixedStrategy {
  std::vector<Mat> elements;
  std::vector<double> weights;

  void validate() const;  // throws std::invalid_argument
};

// Angles of the SU(2) parameterization
//   U(phi, psi, theta) = [[ e^{i phi} cos theta,  e^{i psi} sin theta],
//                         [-e^{-i psi} sin theta, e^{-i phi} cos theta]].
struct EulerAngles {
  double phi = 0.0;
  double psi = 0.0;
  double theta = 0.0;
};

Mat su2_from_euler(const EulerAngles& a);

// Inverse of su2_from_euler: theta in [0, pi/2], phi, psi in [0, 2pi).
// When theta is degenerate (0 or pi/2) the undetermined angle is set to 0.
// Throws std::invalid_argument unless U is special unitary within tol.
EulerAngles euler_decompose(const Mat& u, double tol = kUnitaryTol);

// Haar-distributed SU(2) draw; consumes exactly three uniforms from rng in
// the order phi, psi, p (theta = asin(sqrt(p))).
Mat haar_su2(Rng& rng);

// The uniform mixture over {1l, i sx, i sy, i sz}.
MixedStrategy pauli_strategy();

// Pulse parameters (xi1, xi2, xi3) whose z-y-z realization
// exp(-i xi3 sz) exp(-i xi2 sy) exp(-i xi1 sz) equals the i-th element of
// pauli_strategy() exactly (J = 0, single spin).
std::array<double, 3> pauli_control_params(int i);

// Companion parameter set used for the coupling-calibration benchmarks.
// Row 1 differs from pauli_control_params(1): it realizes i*sy instead of
// i*sx, so the realized set is {1l, i sy, i sy, i sz}. The standard fair
// coupling J/T = 4.10469... is the root of games played with THIS set, and
// the published cheating payoffs are measured against it; keep it as the
// default opponent table so those working points stay reproducible. The set
// still sends |0><0| to the maximally mixed state on a single qubit, so the
// no-advantage baseline of 1/2 is unaffected.
std::array<double, 3> calibration_control_params(int i);

// 3-pulse z, y, z sequence with amplitudes (3/T) xi_k, each for time T/3.
ControlSequence params_to_sequence(const std::array<double, 3>& xi, double T);

// Each table row realized as a move on the given chain (drift included).
std::vector<Mat> pauli_move_unitaries(const ChainConfig& config);
std::vector<Mat> calibration_move_unitaries(const ChainConfig& config);

// First moment sum_k w_k U_k (x) conj(U_k), and its Haar value (entries
// delta_ik delta_jl / 2).
Mat moment_matrix(const MixedStrategy& s);
Mat haar_moment_matrix();

struct DesignCheck {
  bool is_design = false;
  double deviation = 0.0;  // ||M_X - M_Haar||_max
};

// Only t = 1 is supported; other orders throw std::invalid_argument.
DesignCheck is_unitary_design(const MixedStrategy& s, int t, double tol);

}  // namespace qflip
