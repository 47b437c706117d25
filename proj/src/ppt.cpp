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

#include "lattice16/ppt.hpp"

#include <stdexcept>

namespace lattice16 {

QCounts q_counts(const WeightVector& pi, Site site) {
  QCounts q{0.0, 0.0};
  for (int beta = 0; beta < 4; ++beta)
    if (beta != site.row.value)
      q.q1 += pi.at(Site{site.col, PauliIndex(beta)});
  for (int alpha = 0; alpha < 4; ++alpha)
    if (alpha != site.col.value)
      q.q2 += pi.at(Site{PauliIndex(alpha), site.row});
  return q;
}

bool ppt_combinatorial(LatticeSubset i) {
  if (i.empty())
    throw std::invalid_argument("ppt_combinatorial: empty subset");
  const int n = i.size();
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int beta = 0; beta < 4; ++beta) {
      int count = 0;
      for (int b = 0; b < 4; ++b)
        if (b != beta && i.contains(Site{PauliIndex(alpha), PauliIndex(b)}))
          ++count;
      for (int a = 0; a < 4; ++a)
        if (a != alpha && i.contains(Site{PauliIndex(a), PauliIndex(beta)}))
          ++count;
      if (2 * count > n) return false;
    }
  return true;
}

std::array<double, 16> pt_spectrum_closed_form(const WeightVector& pi) {
  std::array<double, 16> out{};
  for (int gamma = 0; gamma < 4; ++gamma)
    for (int delta = 0; delta < 4; ++delta) {
      const Site shifted{PauliIndex(tilde(PauliIndex(gamma))),
                         PauliIndex(tilde(PauliIndex(delta)))};
      const QCounts q = q_counts(pi, shifted);
      out[Site{PauliIndex(gamma), PauliIndex(delta)}.index()] =
          0.25 * (1.0 - 2.0 * (q.q1 + q.q2));
    }
  return out;
}

double pt_min_eigenvalue(const LatticeState& state) {
  const ComplexMatrix pt =
      partial_transpose(state.matrix, 4, 4, Subsystem::First);
  return min_eigenvalue(pt);
}

bool ppt_spectral(const LatticeState& state) {
  return pt_min_eigenvalue(state) >= -kPptTol;
}

}  // namespace lattice16
