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

#include <complex>
#include <Eigen/Dense>

namespace qflip {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

// Default tolerances: unitarity/hermiticity accumulate over long pulse
// products, algebraic identities do not.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;

Mat pauli(char axis);  // 'x', 'y' or 'z'
Mat identity(Eigen::Index dim);

Mat kron(const Mat& a, const Mat& b);

double max_abs(const Mat& m);
double unitarity_error(const Mat& u);    // ||U^dag U - I||_max
double hermiticity_error(const Mat& h);  // ||H - H^dag||_max
bool is_unitary(const Mat& u, double tol = kUnitaryTol);
bool is_hermitian(const Mat& h, double tol = kUnitaryTol);

// Eigendecomposition of a Hermitian matrix: H = Q diag(evals) Q^dag.
struct Eigh {
  Eigen::VectorXd evals;
  Mat evecs;
};
Eigh eigh(const Mat& h);

// exp(-i t H) for Hermitian H, via eigendecomposition. Throws
// std::invalid_argument if H is not Hermitian within kUnitaryTol.
Mat expm_hermitian(const Mat& h, double t);

// As above but from a precomputed decomposition (hot path of the evolver).
Mat expm_from_eigh(const Eigh& e, double t);

// Reduced density matrix of the first qubit: rho must be 2^n x 2^n, n >= 1.
// Throws std::invalid_argument if the dimension is not a power of two.
Mat partial_trace_keep_first(const Mat& rho);

}  // namespace qflip
