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

#include "qflip/linalg.hpp"

#include <stdexcept>

namespace qflip {

Mat pauli(char axis) {
  Mat m(2, 2);
  switch (axis) {
    case 'x':
      m << 0, 1, 1, 0;
      break;
    case 'y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: axis must be 'x', 'y' or 'z'");
  }
  return m;
}

Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

double unitarity_error(const Mat& u) {
  return max_abs(u.adjoint() * u - identity(u.rows()));
}

double hermiticity_error(const Mat& h) { return max_abs(Mat(h - h.adjoint())); }

bool is_unitary(const Mat& u, double tol) {
  return u.rows() == u.cols() && unitarity_error(u) < tol;
}

bool is_hermitian(const Mat& h, double tol) {
  return h.rows() == h.cols() && hermiticity_error(h) < tol;
}

Eigh eigh(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigh: eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Mat expm_hermitian(const Mat& h, double t) {
  if (!is_hermitian(h))
    throw std::invalid_argument("expm_hermitian: matrix is not Hermitian");
  return expm_from_eigh(eigh(h), t);
}

Mat expm_from_eigh(const Eigh& e, double t) {
  const Eigen::Index d = e.evals.size();
  Vec phases(d);
  for (Eigen::Index k = 0; k < d; ++k)
    phases(k) = std::exp(Complex(0, -t * e.evals(k)));
  return e.evecs * phases.asDiagonal() * e.evecs.adjoint();
}

Mat partial_trace_keep_first(const Mat& rho) {
  const Eigen::Index dim = rho.rows();
  if (dim < 2 || rho.cols() != dim || (dim & (dim - 1)) != 0)
    throw std::invalid_argument(
        "partial_trace_keep_first: dimension must be a power of two >= 2");
  const Eigen::Index half = dim / 2;
  Mat red = Mat::Zero(2, 2);
  for (Eigen::Index a = 0; a < 2; ++a)
    for (Eigen::Index b = 0; b < 2; ++b)
      for (Eigen::Index r = 0; r < half; ++r)
        red(a, b) += rho(a * half + r, b * half + r);
  return red;
}

}  // namespace qflip
