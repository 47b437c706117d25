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
//
// Linear maps on d x d matrices in a uniform superoperator representation,
// complete-positivity tests through the Choi matrix, one-sided positivity
// certificates, and the dissipative semigroups used for entanglement
// detection.
//
// Vectorization is column-stacking throughout: the superoperator of
// rho -> A rho B is B^T (x) A. One dedicated unit test pins this convention.

#ifndef LATTICE16_MAPS_HPP
#define LATTICE16_MAPS_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "lattice16/linalg.hpp"

namespace lattice16 {

/// A linear map on d x d matrices, stored as the d^2 x d^2 matrix acting on
/// column-stacked vectorizations.
struct SuperOperator {
  Eigen::Index dim = 0;
  ComplexMatrix matrix;

  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

SuperOperator identity_superop(Eigen::Index d);
/// rho -> A rho B.
SuperOperator sandwich_superop(const ComplexMatrix& a, const ComplexMatrix& b);
/// rho -> rho^T.
SuperOperator transpose_superop(Eigen::Index d);
/// rho -> Tr(rho) * identity.
SuperOperator trace_superop(Eigen::Index d);

/// Composition a after b.
SuperOperator compose(const SuperOperator& a, const SuperOperator& b);
SuperOperator scale(Complex factor, const SuperOperator& a);
SuperOperator add(const SuperOperator& a, const SuperOperator& b);

/// Tensor product map acting on C^{da} (x) C^{db}.
SuperOperator superop_tensor(const SuperOperator& a, const SuperOperator& b);

/// Dual with respect to the trace pairing Tr(L[X] rho) = Tr(X L*[rho]).
SuperOperator pairing_dual(const SuperOperator& m);

/// (id_n (x) L)[X] for a bipartite X on C^n (x) C^d.
ComplexMatrix apply_to_second(const SuperOperator& m, const ComplexMatrix& x,
                              Eigen::Index n);

struct KrausSet {
  std::vector<ComplexMatrix> operators;
};

/// rho -> sum_j G_j rho G_j^dagger.
SuperOperator superop_from_kraus(const KrausSet& ks);

/// Choi matrix (id_d (x) L)[P+]; positive semidefinite iff L is completely
/// positive.
ComplexMatrix choi(const SuperOperator& m);

bool is_cp(const SuperOperator& m, double tol = kPsdTol);

/// Data of a Hermitian map written as sum_j l_j G_j rho G_j^dagger with
/// Hilbert-Schmidt orthonormal G_j.
struct HermDecomposition {
  std::vector<double> eigenvalues;
  std::vector<ComplexMatrix> operators;
  std::vector<double> norms;  // operator norms of the G_j

  /// Diagonalize a Hermitian coefficient matrix over an orthonormal operator
  /// basis (identity/sqrt(d) first, then the traceless ones).
  static HermDecomposition from_coefficients(
      const ComplexMatrix& lambda, const std::vector<ComplexMatrix>& basis);
  static HermDecomposition from_terms(std::vector<double> eigenvalues,
                                      std::vector<ComplexMatrix> operators);
};

enum class PositivityCheck { CertifiedPositive, Inconclusive };

/// One-sided positivity certificate for a decomposition with exactly one
/// negative coefficient l_p: positive whenever M = |G_p|^2 < 1 and every
/// other coefficient is at least M/(1-M) * |l_p|. Never certifies
/// non-positivity. Throws unless exactly one eigenvalue is negative.
PositivityCheck positivity_certificate(const HermDecomposition& h);

/// Generator data of a hermiticity and trace preserving semigroup:
/// L[rho] = -i[H, rho] + sum_ij C_ij (F_i rho F_j^+ - {F_j^+ F_i, rho}/2).
struct GksGenerator {
  ComplexMatrix hamiltonian;          // d x d Hermitian
  ComplexMatrix kossakowski;          // (d^2-1) x (d^2-1) Hermitian
  std::vector<ComplexMatrix> basis;   // F_1..F_{d^2-1}, traceless orthonormal
};

SuperOperator gks_generator_superop(const GksGenerator& g);

/// exp(t L) by scaling and squaring with a truncated series.
SuperOperator exp_generator(const SuperOperator& l, double t);

/// The qubit basis sigma_k / sqrt(2), k = 1..3.
std::vector<ComplexMatrix> qubit_gks_basis();

/// Unital qubit generator relaxing everything onto the maximally mixed
/// state: L[rho] = (sum_k s_k rho s_k - 3 rho) / 2.
GksGenerator depolarizing_generator();

/// Qubit generator whose flow interpolates between the identity and the
/// transposition; its coefficient matrix has one negative entry.
GksGenerator transposing_generator();

enum class SemigroupKind { Gamma1, Gamma2, Gamma };

/// Closed-form semigroups: gamma1/gamma2 act on qubits, Gamma = gamma1 (x)
/// gamma2 on C^4.
///   gamma1_t = e^{-2t} id + (1-e^{-2t})/2 Tr
///   gamma2_t = (1+e^{-2t})/2 id + (1-e^{-2t})/2 T
SuperOperator semigroup_map(SemigroupKind kind, double t);

/// Gamma_t split as cp_part + transposed_part after T_4, with cp_part
/// completely positive for all t and transposed_part completely positive
/// exactly at t = 0 and t >= log(3)/2.
struct ProductMapDecomposition {
  SuperOperator cp_part;          // acts directly
  SuperOperator transposed_part;  // composed with full transposition
};

ProductMapDecomposition product_map_decomposition(double t);

/// Time at which the transposed component of the product semigroup turns
/// completely positive.
inline const double kCpTransitionTime = std::log(3.0) / 2.0;

/// Diagonal coefficient data for a tensor product of two semigroups, with
/// all first-factor coefficients positive and a single negative
/// second-factor coefficient.
struct KossakowskiSpec {
  std::vector<double> c1;
  std::vector<double> c2;
  int negative_index = 0;  // position of the negative entry in c2
};

/// One-sided positivity certificate for the tensor product map: positive
/// whenever every c1 and every other c2 entry dominates |c2[negative]|.
/// Throws if the declared sign pattern does not hold.
PositivityCheck tensor_positivity_certificate(const KossakowskiSpec& spec);

}  // namespace lattice16

#endif  // LATTICE16_MAPS_HPP
