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

#include "lattice16/linalg.hpp"

#include <stdexcept>

namespace lattice16 {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Eigen::Index dim_a,
                                Eigen::Index dim_b, Subsystem which) {
  const Eigen::Index dim = dim_a * dim_b;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  ComplexMatrix out(dim, dim);
  for (Eigen::Index a = 0; a < dim_a; ++a)
    for (Eigen::Index b = 0; b < dim_b; ++b)
      for (Eigen::Index c = 0; c < dim_a; ++c)
        for (Eigen::Index d = 0; d < dim_b; ++d) {
          const Eigen::Index row = a * dim_b + b;
          const Eigen::Index col = c * dim_b + d;
          out(row, col) = which == Subsystem::First
                              ? rho(c * dim_b + b, a * dim_b + d)
                              : rho(a * dim_b + d, c * dim_b + b);
        }
  return out;
}

Spectrum hermitian_eigen(const ComplexMatrix& a) {
  if (!is_hermitian(a))
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: eigensolver failed");
  // Eigen returns ascending order; flip to descending.
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

double min_eigenvalue(const ComplexMatrix& a) {
  if (!is_hermitian(a))
    throw std::invalid_argument("min_eigenvalue: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("min_eigenvalue: eigensolver failed");
  return solver.eigenvalues()(0);
}

bool is_psd(const ComplexMatrix& a, double tol) {
  return min_eigenvalue(a) >= -tol;
}

double operator_norm(const ComplexMatrix& a) {
  const ComplexMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram,
                                                      Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues()(gram.rows() - 1);
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

}  // namespace lattice16
