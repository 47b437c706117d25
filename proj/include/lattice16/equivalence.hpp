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
// Local-unitary equivalence of lattice subsets. A pair of 4x4 unitaries
// (U, W) with W sigma_s U^+ proportional to sigma_{g(s)} relabels sites by
// the bijection g while conjugating the state by U* (x) W; this preserves
// rank, PPT-ness and separability. The module exposes the explicit
// column/row permutation + flip operations and, for orbit computations, the
// full group of site bijections these unitaries induce (which also mixes
// columns into rows through entangling Clifford conjugations).

#ifndef LATTICE16_EQUIVALENCE_HPP
#define LATTICE16_EQUIVALENCE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lattice16/states.hpp"

namespace lattice16 {

/// Column and row label permutations plus the optional flip exchanging
/// (a,b) -> (b,a). The flip is applied first, then the permutations.
struct EquivalenceOp {
  std::array<int, 4> col_perm{0, 1, 2, 3};
  std::array<int, 4> row_perm{0, 1, 2, 3};
  bool flip = false;
};

Site apply_op(Site s, const EquivalenceOp& op);
LatticeSubset apply_op(LatticeSubset i, const EquivalenceOp& op);

/// Composition: apply first, then second.
EquivalenceOp compose_op(const EquivalenceOp& second,
                         const EquivalenceOp& first);

/// Qubit unitaries (w, u) with w sigma_a u^+ proportional to
/// sigma_{perm[a]}; every label permutation is realizable because Pauli
/// labels form an affine plane over F_2 whose point permutations are all
/// affine.
std::pair<ComplexMatrix, ComplexMatrix> pauli_label_unitaries(
    const std::array<int, 4>& perm);

/// 4x4 unitaries (U, W) realizing the op on the whole tensor basis:
/// W sigma_s U^+ is proportional to sigma at the image site.
std::pair<ComplexMatrix, ComplexMatrix> realize_unitaries(
    const EquivalenceOp& op);

/// One element of the full relabeling group together with unitaries
/// realizing it.
struct LatticeSymmetry {
  std::array<std::uint8_t, 16> site_map;
  ComplexMatrix u;  // 4x4
  ComplexMatrix w;  // 4x4

  Site apply(Site s) const { return Site::from_index(site_map[s.index()]); }
  LatticeSubset apply(LatticeSubset i) const;
};

/// The full group of site bijections induced by local unitaries: closure of
/// the column/row permutations, the flip and a controlled-phase
/// conjugation. 11520 elements.
const std::vector<LatticeSymmetry>& lattice_symmetries();

/// Lexicographically smallest mask in the orbit of i. Idempotent.
LatticeSubset canonical_form(LatticeSubset i);

/// All distinct images of i under the group, ascending by mask.
std::vector<LatticeSubset> orbit(LatticeSubset i);

std::uint32_t orbit_size(LatticeSubset i);

/// A group element g with g(from) = to, if one exists.
std::optional<LatticeSymmetry> find_symmetry(LatticeSubset from,
                                             LatticeSubset to);

}  // namespace lattice16

#endif  // LATTICE16_EQUIVALENCE_HPP
