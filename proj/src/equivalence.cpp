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

#include "lattice16/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace lattice16 {

namespace {

// Pauli labels as points of F_2^2, chosen so that label products match
// label XOR: sigma_a sigma_b is proportional to sigma_{a XOR b}.
constexpr std::array<int, 4> kLabelBits{0b00, 0b01, 0b11, 0b10};

int xor_label(int a, int b) {
  const int bits = kLabelBits[a] ^ kLabelBits[b];
  for (int l = 0; l < 4; ++l)
    if (kLabelBits[l] == bits) return l;
  return -1;  // unreachable
}

// Label permutation induced by conjugation: c sigma_a c^+ = +- sigma_p(a).
// Returns an empty optional when c is not a Pauli-frame rotation.
std::optional<std::array<int, 4>> conjugation_label_perm(
    const ComplexMatrix& c) {
  std::array<int, 4> perm{0, -1, -1, -1};
  for (int a = 1; a < 4; ++a) {
    const ComplexMatrix image = c * pauli(a) * c.adjoint();
    for (int b = 1; b < 4; ++b) {
      const Complex overlap = (pauli(b).adjoint() * image).trace() / 2.0;
      if (std::abs(std::abs(overlap) - 1.0) < 1e-9) {
        perm[a] = b;
        break;
      }
    }
    if (perm[a] < 0) return std::nullopt;
  }
  return perm;
}

// Representative Cliffords for the six permutations of {sigma_1, sigma_2,
// sigma_3}, generated from the Hadamard and phase gates.
const std::unordered_map<int, ComplexMatrix>& clifford_frame_table() {
  static const std::unordered_map<int, ComplexMatrix> table = [] {
    std::unordered_map<int, ComplexMatrix> reps;
    ComplexMatrix h(2, 2), s(2, 2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    s << 1, 0, 0, Complex{0, 1};
    const auto key = [](const std::array<int, 4>& p) {
      return p[1] * 16 + p[2] * 4 + p[3];
    };
    std::deque<ComplexMatrix> queue{ComplexMatrix::Identity(2, 2)};
    while (!queue.empty() && reps.size() < 6) {
      const ComplexMatrix c = queue.front();
      queue.pop_front();
      const auto perm = conjugation_label_perm(c);
      if (!perm) continue;
      if (reps.emplace(key(*perm), c).second) {
        queue.push_back(h * c);
        queue.push_back(s * c);
      }
    }
    if (reps.size() != 6)
      throw std::logic_error("clifford_frame_table: generation failed");
    return reps;
  }();
  return table;
}

}  // namespace

Site apply_op(Site s, const EquivalenceOp& op) {
  int col = s.col.value, row = s.row.value;
  if (op.flip) std::swap(col, row);
  return Site{PauliIndex(op.col_perm[col]), PauliIndex(op.row_perm[row])};
}

LatticeSubset apply_op(LatticeSubset i, const EquivalenceOp& op) {
  LatticeSubset out;
  for (int s = 0; s < 16; ++s)
    if ((i.mask >> s) & 1u)
      out.mask |= 1u << apply_op(Site::from_index(s), op).index();
  return out;
}

EquivalenceOp compose_op(const EquivalenceOp& second,
                         const EquivalenceOp& first) {
  EquivalenceOp out;
  out.flip = first.flip != second.flip;
  for (int x = 0; x < 4; ++x) {
    if (second.flip) {
      out.col_perm[x] = second.col_perm[first.row_perm[x]];
      out.row_perm[x] = second.row_perm[first.col_perm[x]];
    } else {
      out.col_perm[x] = second.col_perm[first.col_perm[x]];
      out.row_perm[x] = second.row_perm[first.row_perm[x]];
    }
  }
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> pauli_label_unitaries(
    const std::array<int, 4>& perm) {
  std::array<bool, 4> seen{};
  for (int a = 0; a < 4; ++a) {
    if (perm[a] < 0 || perm[a] > 3 || seen[perm[a]])
      throw std::invalid_argument("pauli_label_unitaries: not a permutation");
    seen[perm[a]] = true;
  }
  // Split into a translation by perm[0] and a linear part fixing the
  // identity label; the latter is a frame rotation realized by a Clifford.
  const int shift = perm[0];
  std::array<int, 4> linear{};
  for (int a = 0; a < 4; ++a) linear[a] = xor_label(shift, perm[a]);
  const auto& table = clifford_frame_table();
  const auto it = table.find(linear[1] * 16 + linear[2] * 4 + linear[3]);
  if (it == table.end())
    throw std::logic_error("pauli_label_unitaries: missing frame rotation");
  const ComplexMatrix& c = it->second;
  return {c, pauli(shift) * c};  // (u, w); w sigma_a u^+ ~ sigma_perm[a]
}

std::pair<ComplexMatrix, ComplexMatrix> realize_unitaries(
    const EquivalenceOp& op) {
  const auto [u_col, w_col] = pauli_label_unitaries(op.col_perm);
  const auto [u_row, w_row] = pauli_label_unitaries(op.row_perm);
  ComplexMatrix u = kron(u_col, u_row);
  ComplexMatrix w = kron(w_col, w_row);
  if (op.flip) {
    const ComplexMatrix swap = flip_v(2);
    u = u * swap;
    w = w * swap;
  }
  return {u, w};
}

LatticeSubset LatticeSymmetry::apply(LatticeSubset i) const {
  LatticeSubset out;
  for (int s = 0; s < 16; ++s)
    if ((i.mask >> s) & 1u) out.mask |= 1u << site_map[s];
  return out;
}

namespace {

std::uint64_t site_map_key(const std::array<std::uint8_t, 16>& map) {
  std::uint64_t key = 0;
  for (int s = 0; s < 16; ++s) key |= static_cast<std::uint64_t>(map[s]) << (4 * s);
  return key;
}

LatticeSymmetry symmetry_from_op(const EquivalenceOp& op) {
  LatticeSymmetry g;
  for (int s = 0; s < 16; ++s)
    g.site_map[s] =
        static_cast<std::uint8_t>(apply_op(Site::from_index(s), op).index());
  std::tie(g.u, g.w) = realize_unitaries(op);
  return g;
}

// Controlled-phase conjugation: entangles the two qubit labels, mapping
// some columns into rows. This is what joins e.g. same-row site pairs with
// generic ones inside a single orbit.
LatticeSymmetry controlled_phase_symmetry() {
  LatticeSymmetry g;
  ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  g.u = cz;
  g.w = cz;
  for (int s = 0; s < 16; ++s) {
    const ComplexMatrix image = cz * sigma_ab(Site::from_index(s)) * cz;
    int found = -1;
    for (int t = 0; t < 16; ++t) {
      const Complex overlap =
          (sigma_ab(Site::from_index(t)).adjoint() * image).trace() / 4.0;
      if (std::abs(std::abs(overlap) - 1.0) < 1e-9) {
        found = t;
        break;
      }
    }
    if (found < 0)
      throw std::logic_error("controlled_phase_symmetry: not a relabeling");
    g.site_map[s] = static_cast<std::uint8_t>(found);
  }
  return g;
}

std::vector<LatticeSymmetry> build_symmetries() {
  std::vector<LatticeSymmetry> generators;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    generators.push_back(
        symmetry_from_op(EquivalenceOp{perm, {0, 1, 2, 3}, false}));
    generators.push_back(
        symmetry_from_op(EquivalenceOp{{0, 1, 2, 3}, perm, false}));
  } while (std::next_permutation(perm.begin(), perm.end()));
  generators.push_back(
      symmetry_from_op(EquivalenceOp{{0, 1, 2, 3}, {0, 1, 2, 3}, true}));
  generators.push_back(controlled_phase_symmetry());

  std::vector<LatticeSymmetry> closure;
  std::unordered_map<std::uint64_t, size_t> index;
  std::deque<size_t> queue;
  LatticeSymmetry identity;
  for (int s = 0; s < 16; ++s) identity.site_map[s] = static_cast<std::uint8_t>(s);
  identity.u = ComplexMatrix::Identity(4, 4);
  identity.w = ComplexMatrix::Identity(4, 4);
  closure.push_back(identity);
  index.emplace(site_map_key(identity.site_map), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const size_t at = queue.front();
    queue.pop_front();
    for (const LatticeSymmetry& gen : generators) {
      LatticeSymmetry next;
      for (int s = 0; s < 16; ++s)
        next.site_map[s] = gen.site_map[closure[at].site_map[s]];
      const std::uint64_t key = site_map_key(next.site_map);
      if (index.contains(key)) continue;
      next.u = gen.u * closure[at].u;
      next.w = gen.w * closure[at].w;
      index.emplace(key, closure.size());
      queue.push_back(closure.size());
      closure.push_back(std::move(next));
    }
  }
  return closure;
}

struct CanonicalTable {
  std::vector<std::uint16_t> canon;
  std::vector<std::uint32_t> size;
};

const CanonicalTable& canonical_table() {
  static const CanonicalTable table = [] {
    const auto& group = lattice_symmetries();
    CanonicalTable t;
    t.canon.assign(65536, 0);
    t.size.assign(65536, 0);
    std::vector<bool> done(65536, false);
    std::vector<std::uint16_t> members;
    for (std::uint32_t mask = 0; mask < 65536; ++mask) {
      if (done[mask]) continue;
      members.clear();
      std::uint16_t smallest = static_cast<std::uint16_t>(mask);
      for (const LatticeSymmetry& g : group) {
        const std::uint16_t image =
            g.apply(LatticeSubset{static_cast<std::uint16_t>(mask)}).mask;
        if (!done[image]) {
          done[image] = true;
          members.push_back(image);
        }
        smallest = std::min(smallest, image);
      }
      for (const std::uint16_t m : members) {
        t.canon[m] = smallest;
        t.size[m] = static_cast<std::uint32_t>(members.size());
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<LatticeSymmetry>& lattice_symmetries() {
  static const std::vector<LatticeSymmetry> group = build_symmetries();
  return group;
}

LatticeSubset canonical_form(LatticeSubset i) {
  return LatticeSubset{canonical_table().canon[i.mask]};
}

std::vector<LatticeSubset> orbit(LatticeSubset i) {
  std::vector<LatticeSubset> out;
  for (const LatticeSymmetry& g : lattice_symmetries()) out.push_back(g.apply(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t orbit_size(LatticeSubset i) {
  return canonical_table().size[i.mask];
}

std::optional<LatticeSymmetry> find_symmetry(LatticeSubset from,
                                             LatticeSubset to) {
  for (const LatticeSymmetry& g : lattice_symmetries())
    if (g.apply(from) == to) return g;
  return std::nullopt;
}

}  // namespace lattice16
