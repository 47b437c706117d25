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

#include <bit>
#include <numeric>

#include "lattice16/equivalence.hpp"
#include "lattice16/ppt.hpp"
#include "lattice16/separability.hpp"
#include "test_helpers.hpp"

using namespace lattice16;
namespace tst = lattice16::testing;

namespace {

EquivalenceOp random_op(std::mt19937& rng) {
  EquivalenceOp op;
  std::shuffle(op.col_perm.begin(), op.col_perm.end(), rng);
  std::shuffle(op.row_perm.begin(), op.row_perm.end(), rng);
  op.flip = rng() & 1u;
  return op;
}

// Proportionality of two nonzero 4x4 matrices up to a unimodular phase.
bool proportional_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace() / 4.0;
  if (std::abs(std::abs(overlap) - 1.0) > 1e-10) return false;
  return max_abs(a - overlap * b) <= 1e-10;
}

}  // namespace

TEST_CASE("explicit operations relabel sites") {
  const EquivalenceOp identity;
  const LatticeSubset i = tst::bound6_example();
  CHECK(apply_op(i, identity) == i);

  EquivalenceOp flip;
  flip.flip = true;
  CHECK(apply_op(tst::subset({{0, 1}}), flip) == tst::subset({{1, 0}}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const LatticeSubset j = tst::random_subset(rng);
    const EquivalenceOp op = random_op(rng);
    CHECK(apply_op(j, op).size() == j.size());
  }
}

TEST_CASE("explicit operations preserve the combinatorial criterion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeSubset i = tst::random_subset(rng);
    const EquivalenceOp op = random_op(rng);
    CHECK(ppt_combinatorial(i) == ppt_combinatorial(apply_op(i, op)));
  }
}

TEST_CASE("composition matches sequential application") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const EquivalenceOp first = random_op(rng);
    const EquivalenceOp second = random_op(rng);
    const EquivalenceOp composite = compose_op(second, first);
    const LatticeSubset i = tst::random_subset(rng);
    CHECK(apply_op(i, composite) == apply_op(apply_op(i, first), second));
  }
}

TEST_CASE("label permutations are realized by qubit unitaries") {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    const auto [u, w] = pauli_label_unitaries(perm);
    CHECK(max_abs(u * u.adjoint() - ComplexMatrix::Identity(2, 2)) <= 1e-12);
    CHECK(max_abs(w * w.adjoint() - ComplexMatrix::Identity(2, 2)) <= 1e-12);
    for (int a = 0; a < 4; ++a) {
      const ComplexMatrix image = w * pauli(a) * u.adjoint();
      const Complex overlap =
          (pauli(perm[a]).adjoint() * image).trace() / 2.0;
      CHECK(std::abs(std::abs(overlap) - 1.0) <= 1e-10);
      CHECK(max_abs(image - overlap * pauli(perm[a])) <= 1e-10);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("realized unitaries conjugate lattice states site by site") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const EquivalenceOp op = random_op(rng);
    const auto [u, w] = realize_unitaries(op);
    const LatticeSubset i = tst::random_subset(rng);
    const ComplexMatrix conjugated =
        kron(u.conjugate(), w) * lattice_state(i).matrix *
        kron(u.transpose(), w.adjoint());
    CHECK(max_abs(conjugated - lattice_state(apply_op(i, op)).matrix) <=
          1e-12);
  }
}

TEST_CASE("full symmetry group") {
  const auto& group = lattice_symmetries();
  CHECK(group.size() == 11520);

  // Every element's unitaries realize its site map.
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeSymmetry& g = group[rng() % group.size()];
    for (int s = 0; s < 16; ++s) {
      const ComplexMatrix image =
          g.w * sigma_ab(Site::from_index(s)) * g.u.adjoint();
      CHECK(proportional_to_phase(image,
                                  sigma_ab(Site::from_index(g.site_map[s]))));
    }
  }

  // Conjugation moves lattice states along the site map.
  for (int trial = 0; trial < 10; ++trial) {
    const LatticeSymmetry& g = group[rng() % group.size()];
    const LatticeSubset i = tst::random_subset(rng);
    const ComplexMatrix conjugated =
        kron(g.u.conjugate(), g.w) * lattice_state(i).matrix *
        kron(g.u.transpose(), g.w.adjoint());
    CHECK(max_abs(conjugated - lattice_state(g.apply(i)).matrix) <= 1e-12);
  }
}

TEST_CASE("orbits") {
  // Single-hole subsets form one orbit of size sixteen.
  const LatticeSubset hole =
      LatticeSubset::full().without(Site{PauliIndex(1), PauliIndex(2)});
  CHECK(orbit(hole).size() == 16);
  CHECK(orbit_size(hole) == 16);

  CHECK(orbit(LatticeSubset::full()) ==
        std::vector<LatticeSubset>{LatticeSubset::full()});

  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const LatticeSubset i = tst::random_subset(rng);
    const auto members = orbit(i);
    CHECK(orbit_size(i) == members.size());
    const bool ppt = ppt_combinatorial(i);
    for (const LatticeSubset& member : members) {
      CHECK(member.size() == i.size());
      CHECK(ppt_combinatorial(member) == ppt);
      CHECK(canonical_form(member) == canonical_form(i));
    }
  }
}

TEST_CASE("canonical forms") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const LatticeSubset i = tst::random_subset(rng);
    const LatticeSubset canon = canonical_form(i);
    CHECK(canonical_form(canon) == canon);
    CHECK(canon.mask <= i.mask);
  }

  // All rank-15 subsets share one canonical form; same for rank-14.
  LatticeSubset canon15 = canonical_form(LatticeSubset{0xfffe});
  LatticeSubset canon14;
  bool first14 = true;
  for (std::uint32_t mask = 1; mask < 65536; ++mask) {
    const auto n = std::popcount(mask);
    if (n == 15)
      CHECK(canonical_form(LatticeSubset{static_cast<std::uint16_t>(mask)}) ==
            canon15);
    if (n == 14) {
      const LatticeSubset canon =
          canonical_form(LatticeSubset{static_cast<std::uint16_t>(mask)});
      if (first14) {
        canon14 = canon;
        first14 = false;
      }
      CHECK(canon == canon14);
    }
  }
}

TEST_CASE("orbit sizes partition the power set") {
  // Sum of 1/|orbit(m)| over all masks counts the orbits; summing the
  // recorded sizes over canonical representatives recovers 2^16.
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < 65536; ++mask) {
    const LatticeSubset i{static_cast<std::uint16_t>(mask)};
    if (canonical_form(i) == i) total += orbit_size(i);
  }
  CHECK(total == 65536);
}

TEST_CASE("relabelings between specific subsets exist") {
  const auto g = find_symmetry(tst::ppt6_left(), rank6_block_subset());
  REQUIRE(g.has_value());
  CHECK(g->apply(tst::ppt6_left()) == rank6_block_subset());
  CHECK_FALSE(
      find_symmetry(tst::ppt4_diagonal(), tst::ppt6_left()).has_value());
}
