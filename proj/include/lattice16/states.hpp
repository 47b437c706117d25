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

#ifndef LATTICE16_STATES_HPP
#define LATTICE16_STATES_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lattice16/pauli.hpp"

namespace lattice16 {

/// Subset of the 16-site lattice as a bit mask; bit for site (a,b) is
/// 4*a + b. Identifies the uniform mixture over its basis projectors.
struct LatticeSubset {
  std::uint16_t mask = 0;

  static LatticeSubset from_sites(std::initializer_list<Site> sites);
  static LatticeSubset from_sites(const std::vector<Site>& sites);
  static LatticeSubset full() { return LatticeSubset{0xffff}; }

  bool contains(Site s) const { return (mask >> s.index()) & 1u; }
  int size() const;
  bool empty() const { return mask == 0; }
  LatticeSubset with(Site s) const {
    return LatticeSubset{static_cast<std::uint16_t>(mask | (1u << s.index()))};
  }
  LatticeSubset without(Site s) const {
    return LatticeSubset{static_cast<std::uint16_t>(mask & ~(1u << s.index()))};
  }
  std::vector<Site> sites() const;

  friend auto operator<=>(const LatticeSubset&, const LatticeSubset&) = default;
};

/// Normalized nonnegative weights over the 16 sites.
struct WeightVector {
  std::array<double, 16> weights{};

  /// Validates nonnegativity and unit sum (1e-12).
  static WeightVector validated(const std::array<double, 16>& w);
  /// 1/N on the subset, zero elsewhere. Throws on the empty subset.
  static WeightVector uniform_on(LatticeSubset i);

  double at(Site s) const { return weights[s.index()]; }
  double operator[](int site_index) const { return weights[site_index]; }
};

/// Ensemble state diagonal in the maximally entangled basis: the matrix is
/// sum_s w_s P_s, so its spectrum is exactly the weight multiset.
struct LatticeState {
  WeightVector weights;
  ComplexMatrix matrix;  // 16x16, Hermitian, PSD, unit trace
};

LatticeState weighted_state(const WeightVector& pi);
LatticeState lattice_state(LatticeSubset i);

/// 4x4 text grid, rows labelled 3..0 top to bottom, columns 0..3, a cross at
/// each member site.
std::string render_grid(LatticeSubset i);

/// Inverse of render_grid. Accepts 'x', 'X' or the multiplication sign as a
/// member cell and '.' or a middle dot as an empty cell.
LatticeSubset parse_grid(std::string_view text);

/// Sorted [alpha, beta] site-list serialization, e.g. "[[0,2],[1,1]]".
std::string subset_to_json(LatticeSubset i);
LatticeSubset subset_from_json(std::string_view text);

}  // namespace lattice16

#endif  // LATTICE16_STATES_HPP
