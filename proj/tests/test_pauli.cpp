// Copyright 2026 The lattice16 Authors
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

#include "lattice16/pauli.hpp"
#include "test_helpers.hpp"

using namespace lattice16;
namespace tst = lattice16::testing;

TEST_CASE("pauli matrices and orthogonality") {
  CHECK(max_abs(pauli(0) - ComplexMatrix::Identity(2, 2)) == 0.0);
  CHECK(pauli(2)(0, 1) == Complex{0.0, -1.0});
  CHECK(pauli(2)(1, 0) == Complex{0.0, 1.0});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Complex tr = (pauli(a) * pauli(b)).trace();
      CHECK(std::abs(tr - (a == b ? 2.0 : 0.0)) <= 1e-15);
    }
  CHECK_THROWS_AS(PauliIndex(4), std::invalid_argument);
  CHECK_THROWS_AS(PauliIndex(-1), std::invalid_argument);
}

TEST_CASE("transposition signs") {
  CHECK(epsilon(0) == 1);
  CHECK(epsilon(1) == 1);
  CHECK(epsilon(2) == -1);
  CHECK(epsilon(3) == 1);
  for (int a = 0; a < 4; ++a)
    CHECK(max_abs(pauli(a).transpose() -
                  static_cast<double>(epsilon(a)) * pauli(a)) == 0.0);
}

TEST_CASE("tensor basis orthonormality") {
  const Site s00{PauliIndex(0), PauliIndex(0)};
  const Site s33{PauliIndex(3), PauliIndex(3)};
  CHECK(max_abs(sigma_ab(s00) - ComplexMatrix::Identity(4, 4)) == 0.0);
  ComplexMatrix zz = ComplexMatrix::Zero(4, 4);
  zz.diagonal() << 1, -1, -1, 1;
  CHECK(max_abs(sigma_ab(s33) - zz) == 0.0);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const Complex tr = (sigma_ab(Site::from_index(i)).adjoint() *
                          sigma_ab(Site::from_index(j)))
                             .trace();
      CHECK(std::abs(tr - (i == j ? 4.0 : 0.0)) <= 1e-15);
    }
}

TEST_CASE("symmetric state") {
  const ComplexVector v2 = psi_plus(2);
  CHECK(v2.size() == 4);
  const double amp = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v2(0) - amp) <= 1e-15);
  CHECK(std::abs(v2(1)) == 0.0);
  CHECK(std::abs(v2(2)) == 0.0);
  CHECK(std::abs(v2(3) - amp) <= 1e-15);

  const ComplexVector v4 = psi_plus(4);
  CHECK(std::abs(v4.norm() - 1.0) <= 1e-15);
  for (int j = 0; j < 4; ++j) CHECK(std::abs(v4(5 * j) - 0.5) <= 1e-15);

  // A (x) 1 acts like 1 (x) A^T on the symmetric state.
  std::mt19937 rng(3);
  const ComplexMatrix a = tst::random_matrix(rng, 4, 4);
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  CHECK(max_abs(kron(a, id4) * v4 - kron(id4, a.transpose()) * v4) <= 1e-14);
}

TEST_CASE("maximally entangled basis projectors") {
  const ComplexVector psi = psi_plus(4);
  CHECK(max_abs(basis_projector(Site{PauliIndex(0), PauliIndex(0)}) -
                psi * psi.adjoint()) <= 1e-15);
  ComplexMatrix sum = ComplexMatrix::Zero(16, 16);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const Complex tr = (basis_projector(Site::from_index(i)) *
                          basis_projector(Site::from_index(j)))
                             .trace();
      CHECK(std::abs(tr - (i == j ? 1.0 : 0.0)) <= 1e-13);
    }
    sum += basis_projector(Site::from_index(i));
  }
  CHECK(max_abs(sum - ComplexMatrix::Identity(16, 16)) <= 1e-12);

  // Gram matrix of the vectors themselves.
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const Complex overlap = max_entangled_vector(Site::from_index(i))
                                  .adjoint() *
                              max_entangled_vector(Site::from_index(j));
      CHECK(std::abs(overlap - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("flip operator") {
  const ComplexMatrix v = flip_v(2);
  ComplexVector e = ComplexVector::Zero(4);
  e(0) = 1.0;
  CHECK(max_abs(v * e - e) == 0.0);
  ComplexVector e01 = ComplexVector::Zero(4);
  e01(1) = 1.0;  // |0 1>
  ComplexVector e10 = ComplexVector::Zero(4);
  e10(2) = 1.0;  // |1 0>
  CHECK(max_abs(v * e01 - e10) == 0.0);

  std::mt19937 rng(5);
  const ComplexMatrix a = tst::random_matrix(rng, 2, 2);
  const ComplexMatrix b = tst::random_matrix(rng, 2, 2);
  CHECK(max_abs(v * kron(a, b) * v - kron(b, a)) <= 1e-15);

  const ComplexMatrix v16 = flip_v(4);
  CHECK(max_abs(v16 * v16 - ComplexMatrix::Identity(16, 16)) == 0.0);
  CHECK(max_abs(v16 * psi_plus(4) - psi_plus(4)) <= 1e-15);
}

TEST_CASE("sign tables") {
  CHECK(xi(0, 2) == -1);
  CHECK(xi(1, 3) == -1);
  CHECK(xi(0, 0) == 1);
  for (int a = 0; a < 4; ++a) {
    int row_sum = 0;
    for (int g = 0; g < 4; ++g) {
      row_sum += xi(a, g);
      CHECK(xi(a, g) == xi(g, a));
      CHECK(xi(a, g) * xi(a, g) == 1);
    }
    CHECK(row_sum == 2);
  }

  CHECK(eta(1, 2) == -1);
  for (int g = 0; g < 4; ++g) CHECK(eta(0, g) == 1);
  for (int a = 0; a < 4; ++a)
    for (int g = 0; g < 4; ++g) {
      // Conjugation sign realized on the matrices themselves.
      CHECK(max_abs(pauli(a) * pauli(g) * pauli(a) -
                    static_cast<double>(eta(a, g)) * pauli(g)) <= 1e-15);
      CHECK(xi(a, g) == epsilon(a) * epsilon(g) * eta(a, g));
    }

  for (int m = 0; m < 4; ++m) CHECK(tilde(PauliIndex(tilde(PauliIndex(m)))) == m);
}

TEST_CASE("conjugated flips and their spectral form") {
  CHECK(max_abs(v_ab(Site{PauliIndex(0), PauliIndex(0)}) - flip_v(4)) == 0.0);

  // Eigenvalue on one basis vector.
  const ComplexVector psi22 =
      max_entangled_vector(Site{PauliIndex(2), PauliIndex(2)});
  const ComplexMatrix v00 = v_ab(Site{PauliIndex(0), PauliIndex(0)});
  CHECK(max_abs(v00 * psi22 - psi22) <= 1e-13);

  // Full spectral reconstruction for all sixteen conjugated flips.
  for (int i = 0; i < 16; ++i) {
    const Site site = Site::from_index(i);
    const ComplexMatrix v = v_ab(site);
    CHECK(is_hermitian(v, 1e-13));
    ComplexMatrix rebuilt = ComplexMatrix::Zero(16, 16);
    for (int j = 0; j < 16; ++j) {
      const Site other = Site::from_index(j);
      rebuilt += static_cast<double>(xi(site.col, other.col) *
                                     xi(site.row, other.row)) *
                 basis_projector(other);
    }
    CHECK(max_abs(v - rebuilt) <= 1e-12);
  }
}
