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

#include "lattice16/linalg.hpp"
#include "lattice16/pauli.hpp"
#include "test_helpers.hpp"

using namespace lattice16;
namespace tst = lattice16::testing;

TEST_CASE("kron on identity and diagonal factors") {
  CHECK(max_abs(kron(pauli(0), pauli(0)) - ComplexMatrix::Identity(4, 4)) ==
        0.0);
  ComplexMatrix zz = kron(pauli(3), pauli(3));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  CHECK(max_abs(zz - expected) == 0.0);
  CHECK(kron(pauli(1), pauli(2)).rows() == 4);
  CHECK(kron(pauli(1), pauli(2)).cols() == 4);
}

TEST_CASE("kron associativity and trace multiplicativity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = tst::random_matrix(rng, 2, 2);
    const ComplexMatrix b = tst::random_matrix(rng, 3, 3);
    const ComplexMatrix c = tst::random_matrix(rng, 2, 2);
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) <= 1e-14);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-12);
  }
}

TEST_CASE("partial transpose of the symmetric projector is the flip") {
  const ComplexVector psi = psi_plus(2);
  const ComplexMatrix p_plus = psi * psi.adjoint();
  const ComplexMatrix v = flip_v(2);
  CHECK(max_abs(partial_transpose(p_plus, 2, 2, Subsystem::First) - v / 2.0) <=
        1e-14);
  CHECK(max_abs(partial_transpose(p_plus, 2, 2, Subsystem::Second) -
                v / 2.0) <= 1e-14);
}

TEST_CASE("partial transpose is an involution and factors products") {
  std::mt19937 rng(11);
  const ComplexMatrix a = tst::random_matrix(rng, 4, 4);
  const ComplexMatrix b = tst::random_matrix(rng, 4, 4);
  const ComplexMatrix m = tst::random_matrix(rng, 16, 16);
  CHECK(max_abs(partial_transpose(
                    partial_transpose(m, 4, 4, Subsystem::First), 4, 4,
                    Subsystem::First) -
                m) == 0.0);
  CHECK(max_abs(partial_transpose(kron(a, b), 4, 4, Subsystem::First) -
                kron(a.transpose(), b)) == 0.0);
  CHECK(max_abs(partial_transpose(kron(a, b), 4, 4, Subsystem::Second) -
                kron(a, b.transpose())) == 0.0);
}

TEST_CASE("partial transpose preserves hermiticity and trace; both factors "
          "compose to the full transpose") {
  std::mt19937 rng(13);
  const ComplexMatrix h = tst::random_hermitian(rng, 16);
  const ComplexMatrix pt = partial_transpose(h, 4, 4, Subsystem::First);
  CHECK(is_hermitian(pt, 1e-13));
  CHECK(std::abs(pt.trace() - h.trace()) <= 1e-13);
  const ComplexMatrix both = partial_transpose(
      partial_transpose(h, 4, 4, Subsystem::First), 4, 4, Subsystem::Second);
  CHECK(max_abs(both - h.transpose()) == 0.0);
  CHECK_THROWS_AS(partial_transpose(h, 3, 4, Subsystem::First),
                  std::invalid_argument);
}

TEST_CASE("hermitian eigendecomposition on known spectra") {
  const Spectrum z = hermitian_eigen(pauli(3));
  CHECK(z.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(z.eigenvalues(1) == doctest::Approx(-1.0));

  // Direct diagonalization of the two-qubit flip: symmetric subspace gives
  // +1 three times, the antisymmetric singlet gives -1.
  const Spectrum v = hermitian_eigen(flip_v(2));
  CHECK(tst::multiset_distance(tst::to_vector(v.eigenvalues),
                               {1.0, 1.0, 1.0, -1.0}) <= 1e-12);

  const ComplexVector psi = psi_plus(4);
  const Spectrum p = hermitian_eigen(psi * psi.adjoint());
  std::vector<double> expected(16, 0.0);
  expected[0] = 1.0;
  CHECK(tst::multiset_distance(tst::to_vector(p.eigenvalues), expected) <=
        1e-12);
}

TEST_CASE("hermitian eigendecomposition reconstructs and is orthonormal") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const ComplexMatrix a = tst::random_hermitian(rng, 16);
    const Spectrum s = hermitian_eigen(a);
    const ComplexMatrix reconstructed =
        s.eigenvectors * s.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
        s.eigenvectors.adjoint();
    CHECK(max_abs(reconstructed - a) <= 1e-10);
    CHECK(max_abs(s.eigenvectors.adjoint() * s.eigenvectors -
                  ComplexMatrix::Identity(16, 16)) <= 1e-10);
    CHECK(std::abs(s.eigenvalues.sum() - a.trace().real()) <= 1e-10);
    for (Eigen::Index k = 1; k < s.eigenvalues.size(); ++k)
      CHECK(s.eigenvalues(k - 1) >= s.eigenvalues(k));
  }
  CHECK_THROWS_AS(hermitian_eigen(tst::random_matrix(rng, 4, 4)),
                  std::invalid_argument);
}

TEST_CASE("psd test") {
  CHECK(is_psd(ComplexMatrix::Identity(3, 3)));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d.diagonal() << 1.0, -0.5;
  CHECK_FALSE(is_psd(d, 1e-10));
  const ComplexVector psi = psi_plus(2);
  CHECK_FALSE(is_psd(
      partial_transpose(psi * psi.adjoint(), 2, 2, Subsystem::First), 1e-10));
  CHECK_THROWS_AS(is_psd(kron(pauli(1), pauli(0)).block(0, 1, 2, 2)),
                  std::invalid_argument);
}

TEST_CASE("operator norm is the largest singular value") {
  std::mt19937 rng(23);
  const ComplexMatrix a = tst::random_matrix(rng, 4, 4);
  const Eigen::JacobiSVD<ComplexMatrix> svd(a);
  CHECK(operator_norm(a) ==
        doctest::Approx(svd.singularValues()(0)).epsilon(1e-10));
  CHECK(operator_norm(pauli(1) / std::sqrt(2.0)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
}
