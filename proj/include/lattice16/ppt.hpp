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
// Positivity under partial transposition for lattice states, by three
// mutually checking routes: a combinatorial column/row counting criterion,
// a closed-form spectrum, and brute-force diagonalization of the partially
// transposed matrix.

#ifndef LATTICE16_PPT_HPP
#define LATTICE16_PPT_HPP

#include <array>

#include "lattice16/states.hpp"

namespace lattice16 {

// Boundary states have exactly-zero partial-transpose eigenvalues; the
// threshold keeps them on the positive side.
inline constexpr double kPptTol = 1e-10;

/// Weight of the site's column excluding its row (q1) and of its row
/// excluding its column (q2).
struct QCounts {
  double q1;
  double q2;
};

QCounts q_counts(const WeightVector& pi, Site site);

/// Column/row counting criterion: the subset is PPT iff no column+row pair
/// holds more than N/2 members outside its intersection point.
bool ppt_combinatorial(LatticeSubset i);

/// Spectrum of the partial transpose (first factor) of the weighted state,
/// indexed by lattice site: value at (g,d) is (1/4) sum_ab pi_ab xi(a,g)
/// xi(b,d), evaluated via the q-counts at the tilde-mapped site.
std::array<double, 16> pt_spectrum_closed_form(const WeightVector& pi);

/// Smallest eigenvalue of the materialized, diagonalized partial transpose;
/// the oracle route.
double pt_min_eigenvalue(const LatticeState& state);

bool ppt_spectral(const LatticeState& state);

}  // namespace lattice16

#endif  // LATTICE16_PPT_HPP
