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

#include <stdexcept>

#include "qflip/chain.hpp"
#include "qflip/linalg.hpp"

using namespace qflip;

TEST_CASE("pauli matrices have the textbook entries") {
  const Mat sx = pauli('x');
  const Mat sy = pauli('y');
  const Mat sz = pauli('z');
  CHECK(sx(0, 1) == Complex{1, 0});
  CHECK(sx(1, 0) == Complex{1, 0});
  CHECK(sx(0, 0) == Complex{0, 0});
  CHECK(sy(0, 1) == Complex{0, -1});
  CHECK(sy(1, 0) == Complex{0, 1});
  CHECK(sz(0, 0) == Complex{1, 0});
  CHECK(sz(1, 1) == Complex{-1, 0});
  for (const Mat& s : {sx, sy, sz}) {
    CHECK(hermiticity_error(s) == 0.0);
    CHECK(unitarity_error(s) < 1e-15);
    CHECK(max_abs(s * s - identity(2)) < 1e-15);
  }
  CHECK_THROWS_AS(pauli('w'), std::invalid_argument);
}

TEST_CASE("kron follows the mixed-product rule") {
  const Mat a = pauli('x');
  const Mat b = pauli('y');
  const Mat c = pauli('z');
  const Mat d = identity(2);
  CHECK(kron(a, b).rows() == 4);
  CHECK(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)) < 1e-15);
  // sigma_z x 1l is diagonal (+1, +1, -1, -1).
  const Mat zi = kron(pauli('z'), identity(2));
  CHECK(zi(0, 0) == Complex{1, 0});
  CHECK(zi(1, 1) == Complex{1, 0});
  CHECK(zi(2, 2) == Complex{-1, 0});
  CHECK(zi(3, 3) == Complex{-1, 0});
  CHECK(max_abs(zi) == 1.0);
}

TEST_CASE("unitarity and hermiticity predicates") {
  CHECK(is_unitary(identity(4)));
  CHECK(is_hermitian(pauli('y')));
  CHECK_FALSE(is_unitary(2.0 * identity(2)));
  Mat m(2, 2);
  m << Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0};
  CHECK_FALSE(is_hermitian(m));
  CHECK(hermiticity_error(m) == doctest::Approx(1.0));
}

TEST_CASE("eigh reconstructs the input and orders eigenvalues") {
  ChainConfig chain;
  chain.n = 2;
  chain.J = 1.0;
  const Mat h = drift_hamiltonian(chain);
  const Eigh e = eigh(h);
  // Heisenberg pair: singlet at -3J below the triplet at +J.
  CHECK(e.evals[0] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(e.evals[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.evals[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.evals[3] == doctest::Approx(1.0).epsilon(1e-12));
  const Mat back =
      e.evecs * e.evals.cast<Complex>().asDiagonal() * e.evecs.adjoint();
  CHECK(max_abs(back - h) < 1e-12);
  CHECK(unitarity_error(e.evecs) < 1e-12);
}

TEST_CASE("hermitian matrix exponential matches a reference rotation") {
  // exp(-i 0.7 sigma_y) computed by an independent eigendecomposition.
  const Mat u = expm_hermitian(pauli('y'), 0.7);
  CHECK(u(0, 0).real() == doctest::Approx(0.7648421872844884).epsilon(1e-14));
  CHECK(u(0, 1).real() == doctest::Approx(-0.6442176872376909).epsilon(1e-14));
  CHECK(u(1, 0).real() == doctest::Approx(0.6442176872376909).epsilon(1e-14));
  CHECK(u(1, 1).real() == doctest::Approx(0.7648421872844884).epsilon(1e-14));
  CHECK(std::abs(u(0, 0).imag()) < 1e-14);
  CHECK(std::abs(u(0, 1).imag()) < 1e-14);
  CHECK(unitarity_error(u) < 1e-14);

  Mat non_hermitian(2, 2);
  non_hermitian << Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0};
  CHECK_THROWS_AS(expm_hermitian(non_hermitian, 1.0), std::invalid_argument);
}

TEST_CASE("exponential of a driven pair Hamiltonian") {
  // exp(-i 0.25 (H0(J=1.3) + 0.9 sigma_z x 1l)); corner entries from an
  // independent scipy.linalg.expm run.
  ChainConfig chain;
  chain.n = 2;
  chain.J = 1.3;
  const Mat h = drift_hamiltonian(chain) +
                0.9 * control_operator(chain, Axis::kZ);
  const Mat u = expm_hermitian(h, 0.25);
  CHECK(u(0, 0).real() == doctest::Approx(0.8525245220595057).epsilon(1e-13));
  CHECK(u(0, 0).imag() == doctest::Approx(-0.5226872289306592).epsilon(1e-13));
  CHECK(u(3, 3).real() == doctest::Approx(0.9950041652780258).epsilon(1e-13));
  CHECK(u(3, 3).imag() ==
        doctest::Approx(-0.09983341664682815).epsilon(1e-13));
  for (int j = 1; j < 4; ++j) CHECK(std::abs(u(0, j)) < 1e-14);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(u(3, j)) < 1e-14);
  // The cached-decomposition variant agrees entrywise.
  CHECK(max_abs(expm_from_eigh(eigh(h), 0.25) - u) < 1e-14);
}

TEST_CASE("partial trace keeps the first qubit") {
  Vec psi(4);
  psi << Complex{0.5, 0}, Complex{0, 0.5}, Complex{-0.5, 0}, Complex{0.5, 0};
  const Mat rho = psi * psi.adjoint();
  const Mat red = partial_trace_keep_first(rho);
  CHECK(red.rows() == 2);
  CHECK(red(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(red(0, 1).real() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(red(0, 1).imag() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(red(1, 0).real() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(red(1, 0).imag() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(red(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(red.trace() - Complex{1, 0}) < 1e-15);

  CHECK_THROWS_AS(partial_trace_keep_first(identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace_keep_first(identity(1)), std::invalid_argument);
}

TEST_CASE("partial trace of a product state is the first factor") {
  Vec first(2), rest(4);
  first << Complex{0.6, 0}, Complex{0, 0.8};
  rest << Complex{0.5, 0}, Complex{0.5, 0}, Complex{0.5, 0}, Complex{0, 0.5};
  Vec psi(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) psi[i * 4 + j] = first[i] * rest[j];
  const Mat red = partial_trace_keep_first(psi * psi.adjoint());
  CHECK(max_abs(red - first * first.adjoint()) < 1e-15);
}
