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

#include "qflip/strategy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qflip {

namespace {
constexpr double kPi = std::numbers::pi;
}

void MixedStrategy::validate() const {
  if (elements.size() != weights.size() || elements.empty())
    throw std::invalid_argument("MixedStrategy: size mismatch or empty");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("MixedStrategy: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-15)
    throw std::invalid_argument("MixedStrategy: weights must sum to 1");
  for (const Mat& u : elements)
    if (!is_unitary(u, 1e-12))
      throw std::invalid_argument("MixedStrategy: non-unitary element");
}

Mat su2_from_euler(const EulerAngles& a) {
  const double c = std::cos(a.theta), s = std::sin(a.theta);
  Mat u(2, 2);
  u(0, 0) = std::exp(Complex(0, a.phi)) * c;
  u(0, 1) = std::exp(Complex(0, a.psi)) * s;
  u(1, 0) = -std::exp(Complex(0, -a.psi)) * s;
  u(1, 1) = std::exp(Complex(0, -a.phi)) * c;
  return u;
}

EulerAngles euler_decompose(const Mat& u, double tol) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, tol) ||
      std::abs(u.determinant() - Complex(1, 0)) > tol)
    throw std::invalid_argument("euler_decompose: input is not in SU(2)");
  EulerAngles a;
  a.theta = std::atan2(std::abs(u(0, 1)), std::abs(u(0, 0)));
  // std::arg(0) == 0, which implements the degenerate-angle convention.
  a.phi = std::arg(u(0, 0));
  a.psi = std::arg(u(0, 1));
  if (a.phi < 0) a.phi += 2 * kPi;
  if (a.psi < 0) a.psi += 2 * kPi;
  return a;
}

Mat haar_su2(Rng& rng) {
  EulerAngles a;
  a.phi = rng.uniform(0.0, 2 * kPi);
  a.psi = rng.uniform(0.0, 2 * kPi);
  a.theta = std::asin(std::sqrt(rng.uniform()));
  return su2_from_euler(a);
}

MixedStrategy pauli_strategy() {
  MixedStrategy s;
  s.elements = {identity(2), kI * pauli('x'), kI * pauli('y'),
                kI * pauli('z')};
  s.weights = {0.25, 0.25, 0.25, 0.25};
  return s;
}

std::array<double, 3> pauli_control_params(int i) {
  switch (i) {
    case 0: return {0.0, 0.0, 0.0};
    case 1: return {kPi / 4, -kPi / 2, -kPi / 4};
    case 2: return {0.0, -kPi / 2, 0.0};
    case 3: return {-kPi / 4, 0.0, -kPi / 4};
    default:
      throw std::invalid_argument("pauli_control_params: index must be 0..3");
  }
}

std::array<double, 3> calibration_control_params(int i) {
  switch (i) {
    case 0: return {0.0, 0.0, 0.0};
    case 1: return {kPi / 4, -kPi / 2, kPi / 4};
    case 2: return {0.0, -kPi / 2, 0.0};
    case 3: return {-kPi / 4, 0.0, -kPi / 4};
    default:
      throw std::invalid_argument(
          "calibration_control_params: index must be 0..3");
  }
}

ControlSequence params_to_sequence(const std::array<double, 3>& xi, double T) {
  const double scale = 3.0 / T;
  return alternating_sequence(
      {scale * xi[0], scale * xi[1], scale * xi[2]}, Axis::kZ);
}

namespace {

std::vector<Mat> table_move_unitaries(const ChainConfig& config,
                                      std::array<double, 3> (*row)(int)) {
  std::vector<Mat> moves;
  moves.reserve(4);
  for (int i = 0; i < 4; ++i)
    moves.push_back(evolve_move(config, params_to_sequence(row(i), config.T)));
  return moves;
}

}  // namespace

std::vector<Mat> pauli_move_unitaries(const ChainConfig& config) {
  return table_move_unitaries(config, &pauli_control_params);
}

std::vector<Mat> calibration_move_unitaries(const ChainConfig& config) {
  return table_move_unitaries(config, &calibration_control_params);
}

Mat moment_matrix(const MixedStrategy& s) {
  s.validate();
  Mat m = Mat::Zero(4, 4);
  for (std::size_t k = 0; k < s.elements.size(); ++k)
    m += s.weights[k] * kron(s.elements[k], s.elements[k].conjugate());
  return m;
}

Mat haar_moment_matrix() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

DesignCheck is_unitary_design(const MixedStrategy& s, int t, double tol) {
  if (t != 1)
    throw std::invalid_argument("is_unitary_design: only t = 1 is supported");
  const double dev = max_abs(Mat(moment_matrix(s) - haar_moment_matrix()));
  return {dev < tol, dev};
}

}  // namespace qflip
