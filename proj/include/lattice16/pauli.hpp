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
// Pauli tensor basis for the 4x4 site lattice: sigma_{ab} = sigma_a (x)
// sigma_b, the maximally entangled basis it generates on C^4 (x) C^4, the
// flip operator and its conjugates, and the +-1 sign tables used by the
// closed-form spectra.

#ifndef LATTICE16_PAULI_HPP
#define LATTICE16_PAULI_HPP

#include <array>
#include <compare>

#include "lattice16/linalg.hpp"

namespace lattice16 {

/// Pauli label in {0,1,2,3}; 0 is the identity. Range-checked.
struct PauliIndex {
  int value;
  PauliIndex(int v);  // NOLINT: implicit by design, labels are plain ints
  operator int() const { return value; }
};

/// Lattice site (alpha, beta): alpha indexes the column (first qubit of the
/// C^4 factor), beta the row (second qubit). Linear index is 4*alpha + beta.
struct Site {
  PauliIndex col;  // alpha
  PauliIndex row;  // beta
  int index() const { return 4 * col.value + row.value; }
  static Site from_index(int s);
  friend bool operator==(const Site& a, const Site& b) {
    return a.col.value == b.col.value && a.row.value == b.row.value;
  }
};

/// sigma_0 = identity, sigma_1/2/3 the standard Pauli matrices.
const ComplexMatrix& pauli(PauliIndex alpha);

/// Transposition sign: sigma_a^T = epsilon(a) * sigma_a.
int epsilon(PauliIndex alpha);

/// 4x4 tensor sigma_a (x) sigma_b; Hermitian, Tr(s† s') = 4 delta.
const ComplexMatrix& sigma_ab(Site s);

/// (1/sqrt(d)) sum_j |j>|j> in the computational basis.
ComplexVector psi_plus(int d);

/// Maximally entangled basis vector (1_4 (x) sigma_ab) |psi_plus(4)>.
const ComplexVector& max_entangled_vector(Site s);

/// Rank-1 projector onto max_entangled_vector(s); the 16 projectors are
/// mutually orthogonal and sum to the identity.
const ComplexMatrix& basis_projector(Site s);

/// Flip (swap) operator: V |a(x)b> = |b(x)a>, V^2 = 1.
ComplexMatrix flip_v(int d);

/// Conjugated flip (1_4 (x) sigma_ab) V (1_4 (x) sigma_ab) on C^16.
/// Self-adjoint with spectral form sum_{gd} xi(a,g) xi(b,d) P_gd.
ComplexMatrix v_ab(Site s);

/// xi(a,g) = -1 iff |a-g| = 2, else +1.
int xi(PauliIndex alpha, PauliIndex gamma);

/// Conjugation sign: sigma_a sigma_g sigma_a = eta(a,g) * sigma_g.
int eta(PauliIndex alpha, PauliIndex gamma);

/// Label bijection m -> (m+2) mod 4; pairs each label with the one at
/// xi-distance two. Involutive.
int tilde(PauliIndex mu);

}  // namespace lattice16

#endif  // LATTICE16_PAULI_HPP
