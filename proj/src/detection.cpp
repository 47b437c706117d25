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

#include "lattice16/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lattice16/equivalence.hpp"
#include "lattice16/ppt.hpp"

namespace lattice16 {

double p_coeff(PauliIndex mu, PauliIndex nu, PauliIndex alpha, PauliIndex beta,
               double t) {
  if (t < 0.0) throw std::invalid_argument("p_coeff: negative time");
  const double decay = std::exp(-2.0 * t);
  const double first =
      (alpha.value == mu.value ? 4.0 * decay : 0.0) + 1.0 - decay;
  const double second = (beta.value == nu.value ? 2.0 * (1.0 + decay) : 0.0) +
                        (1.0 - decay) * xi(beta, nu);
  return first * second / 16.0;
}

EvolvedSpectrum evolved_spectrum(LatticeSubset i, double t) {
  if (i.empty()) throw std::invalid_argument("evolved_spectrum: empty subset");
  EvolvedSpectrum out{t, {}};
  const std::vector<Site> members = i.sites();
  const double inv_n = 1.0 / static_cast<double>(members.size());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double sum = 0.0;
      for (const Site& m : members)
        sum += p_coeff(PauliIndex(mu), PauliIndex(nu), m.col, m.row, t);
      out.values[Site{PauliIndex(mu), PauliIndex(nu)}.index()] = sum * inv_n;
    }
  return out;
}

double witness_d(const SuperOperator& map4, const ComplexMatrix& rho16) {
  if (map4.dim != 4 || rho16.rows() != 16 || rho16.cols() != 16)
    throw std::invalid_argument("witness_d: dimension mismatch");
  return (choi(map4) * rho16).trace().real();
}

WitnessTable make_witness_table(double t) {
  const ComplexMatrix pairing = choi(semigroup_map(SemigroupKind::Gamma, t));
  WitnessTable table{t, {}};
  for (int s = 0; s < 16; ++s)
    table.site_pairing[s] =
        (pairing * basis_projector(Site::from_index(s))).trace().real();
  return table;
}

std::optional<ColumnRowWitness> find_column_row_witness(LatticeSubset i) {
  if (i.empty())
    throw std::invalid_argument("find_column_row_witness: empty subset");
  // Scan corners from (3,3) downwards so worked grid examples land on the
  // top-right witness.
  for (int gamma = 3; gamma >= 0; --gamma)
    for (int delta = 3; delta >= 0; --delta) {
      const Site corner{PauliIndex(gamma), PauliIndex(delta)};
      if (i.contains(corner)) continue;
      int count = 0;
      Site sole = corner;
      for (int b = 0; b < 4; ++b)
        if (i.contains(Site{PauliIndex(gamma), PauliIndex(b)})) {
          ++count;
          sole = Site{PauliIndex(gamma), PauliIndex(b)};
        }
      for (int a = 0; a < 4; ++a)
        if (i.contains(Site{PauliIndex(a), PauliIndex(delta)})) {
          ++count;
          sole = Site{PauliIndex(a), PauliIndex(delta)};
        }
      if (count == 1) return ColumnRowWitness{corner, sole};
    }
  return std::nullopt;
}

namespace {

std::array<int, 4> permutation_sending(int from_a, int to_a, int from_b,
                                       int to_b) {
  std::array<int, 4> perm{-1, -1, -1, -1};
  std::array<bool, 4> used{};
  perm[from_a] = to_a;
  used[to_a] = true;
  if (from_b >= 0) {
    perm[from_b] = to_b;
    used[to_b] = true;
  }
  for (int x = 0; x < 4; ++x) {
    if (perm[x] >= 0) continue;
    for (int y = 0; y < 4; ++y)
      if (!used[y]) {
        perm[x] = y;
        used[y] = true;
        break;
      }
  }
  return perm;
}

}  // namespace

LatticeSubset witness_normal_form(LatticeSubset i) {
  const auto witness = find_column_row_witness(i);
  if (!witness)
    throw std::invalid_argument("witness_normal_form: no witness present");
  LatticeSubset working = i;
  Site corner = witness->corner;
  Site sole = witness->sole_member;
  if (sole.col.value != corner.col.value) {
    // Lone member sits in the row; flip so it sits in a column.
    const EquivalenceOp flip{{0, 1, 2, 3}, {0, 1, 2, 3}, true};
    working = apply_op(working, flip);
    corner = Site{corner.row, corner.col};
    sole = Site{sole.row, sole.col};
  }
  EquivalenceOp op;
  op.col_perm = permutation_sending(corner.col.value, 3, -1, -1);
  op.row_perm =
      permutation_sending(corner.row.value, 3, sole.row.value, 1);
  return apply_op(working, op);
}

std::vector<WitnessTable> make_witness_tables(std::span<const double> t_grid) {
  std::vector<WitnessTable> tables;
  tables.reserve(t_grid.size());
  for (const double t : t_grid) tables.push_back(make_witness_table(t));
  return tables;
}

const std::vector<double>& default_t_grid() {
  // Dense near zero where the combinatorial witness produces negativity and
  // near the decomposability transition where detection dies.
  static const std::vector<double> grid{0.001, 0.01, 0.05, 0.1,  0.2,
                                        0.3,   0.4,  0.5,  0.52, 0.549};
  return grid;
}

Verdict classify(LatticeSubset i) {
  static const std::vector<WitnessTable> tables =
      make_witness_tables(default_t_grid());
  return classify(i, std::span<const WitnessTable>(tables));
}

Verdict classify(LatticeSubset i, std::span<const double> t_grid, double tol) {
  const std::vector<WitnessTable> tables = make_witness_tables(t_grid);
  return classify(i, std::span<const WitnessTable>(tables), tol);
}

Verdict classify(LatticeSubset i, std::span<const WitnessTable> tables,
                 double tol) {
  if (i.empty()) throw std::invalid_argument("classify: empty subset");
  Verdict verdict;
  verdict.kind = VerdictKind::PptUndetermined;
  const auto pt_spectrum =
      pt_spectrum_closed_form(WeightVector::uniform_on(i));
  verdict.pt_min_eigenvalue =
      *std::min_element(pt_spectrum.begin(), pt_spectrum.end());

  if (!ppt_combinatorial(i)) {
    verdict.kind = VerdictKind::NptEntangled;
    return verdict;
  }

  verdict.column_row_witness = find_column_row_witness(i);
  const std::vector<Site> members = i.sites();
  for (const WitnessTable& table : tables) {
    const EvolvedSpectrum spectrum = evolved_spectrum(i, table.t);
    const double min_value =
        *std::min_element(spectrum.values.begin(), spectrum.values.end());
    double pairing = 0.0;
    for (const Site& s : members) pairing += table.site_pairing[s.index()];
    pairing /= static_cast<double>(members.size());
    if (min_value < -tol || pairing < -tol) {
      verdict.detect_t = table.t;
      verdict.min_evolved_eigenvalue = min_value;
      verdict.witness_value = pairing;
      break;
    }
  }

  if (verdict.column_row_witness || verdict.detect_t) {
    verdict.kind = VerdictKind::BoundEntangled;
    return verdict;
  }

  if (const auto cert = separability_certificate(i)) {
    verdict.kind = VerdictKind::SeparableCertified;
    verdict.certificate = cert->kind;
    return verdict;
  }
  return verdict;
}

}  // namespace lattice16
