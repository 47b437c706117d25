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

#include "lattice16/pauli.hpp"

#include <stdexcept>
#include <vector>

namespace lattice16 {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<ComplexMatrix, 4> make_paulis() {
  std::array<ComplexMatrix, 4> p;
  for (auto& m : p) m = ComplexMatrix::Zero(2, 2);
  p[0] << 1, 0, 0, 1;
  p[1] << 0, 1, 1, 0;
  p[2] << 0, -kI, kI, 0;
  p[3] << 1, 0, 0, -1;
  return p;
}

}  // namespace

PauliIndex::PauliIndex(int v) : value(v) {
  if (v < 0 || v > 3)
    throw std::invalid_argument("PauliIndex: label out of range");
}

Site Site::from_index(int s) {
  if (s < 0 || s > 15) throw std::invalid_argument("Site: index out of range");
  return Site{PauliIndex(s / 4), PauliIndex(s % 4)};
}

const ComplexMatrix& pauli(PauliIndex alpha) {
  static const std::array<ComplexMatrix, 4> paulis = make_paulis();
  return paulis[alpha.value];
}

int epsilon(PauliIndex alpha) { return alpha.value == 2 ? -1 : 1; }

const ComplexMatrix& sigma_ab(Site s) {
  static const std::array<ComplexMatrix, 16> cache = [] {
    std::array<ComplexMatrix, 16> c;
    for (int i = 0; i < 16; ++i) {
      const Site site = Site::from_index(i);
      c[i] = kron(pauli(site.col), pauli(site.row));
    }
    return c;
  }();
  return cache[s.index()];
}

ComplexVector psi_plus(int d) {
  if (d < 2) throw std::invalid_argument("psi_plus: dimension must be >= 2");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) v(j * d + j) = amp;
  return v;
}

const ComplexVector& max_entangled_vector(Site s) {
  static const std::array<ComplexVector, 16> cache = [] {
    std::array<ComplexVector, 16> c;
    const ComplexVector base = psi_plus(4);
    const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
    for (int i = 0; i < 16; ++i)
      c[i] = kron(id4, sigma_ab(Site::from_index(i))) * base;
    return c;
  }();
  return cache[s.index()];
}

const ComplexMatrix& basis_projector(Site s) {
  static const std::array<ComplexMatrix, 16> cache = [] {
    std::array<ComplexMatrix, 16> c;
    for (int i = 0; i < 16; ++i) {
      const ComplexVector& v = max_entangled_vector(Site::from_index(i));
      c[i] = v * v.adjoint();
    }
    return c;
  }();
  return cache[s.index()];
}

ComplexMatrix flip_v(int d) {
  if (d < 2) throw std::invalid_argument("flip_v: dimension must be >= 2");
  ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(d) * d,
                                        static_cast<Eigen::Index>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) v(b * d + a, a * d + b) = 1.0;
  return v;
}

ComplexMatrix v_ab(Site s) {
  static const ComplexMatrix v16 = flip_v(4);
  const ComplexMatrix conj =
      kron(ComplexMatrix::Identity(4, 4), sigma_ab(s));
  return conj * v16 * conj;
}

int xi(PauliIndex alpha, PauliIndex gamma) {
  return std::abs(alpha.value - gamma.value) == 2 ? -1 : 1;
}

int eta(PauliIndex alpha, PauliIndex gamma) {
  if (alpha.value == 0 || gamma.value == 0 || alpha.value == gamma.value)
    return 1;
  return -1;
}

int tilde(PauliIndex mu) { return (mu.value + 2) % 4; }

}  // namespace lattice16
