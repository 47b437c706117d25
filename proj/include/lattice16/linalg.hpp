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

#ifndef LATTICE16_LINALG_HPP
#define LATTICE16_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace lattice16 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Matrices handled here are at most 16x16 (superoperators 256x256) with
// entries of order one, so fixed absolute tolerances are appropriate.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

enum class Subsystem { First, Second };

/// Transpose one tensor factor of a (dim_a*dim_b)-dimensional bipartite
/// operator. Involutive and trace preserving.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Eigen::Index dim_a,
                                Eigen::Index dim_b, Subsystem which);

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// No ordering is guaranteed inside a degenerate cluster; compare spectra
/// as multisets.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // orthonormal columns, paired with eigenvalues
};

/// Throws std::invalid_argument unless a is Hermitian within kHermitianTol.
Spectrum hermitian_eigen(const ComplexMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix (eigenvalues-only path).
double min_eigenvalue(const ComplexMatrix& a);

/// True iff the smallest eigenvalue is >= -tol. Hermitian input required.
bool is_psd(const ComplexMatrix& a, double tol = kPsdTol);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

}  // namespace lattice16

#endif  // LATTICE16_LINALG_HPP
