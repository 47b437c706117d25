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
// Entanglement detection with the product semigroup: closed-form spectra of
// (id (x) Gamma_t) on lattice states, the trace-pairing witness, a
// combinatorial sufficient condition, and the verdict logic combining them
// with the separability certificates.

#ifndef LATTICE16_DETECTION_HPP
#define LATTICE16_DETECTION_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "lattice16/maps.hpp"
#include "lattice16/separability.hpp"
#include "lattice16/states.hpp"

namespace lattice16 {

// A boundary-zero eigenvalue must never trigger a verdict.
inline constexpr double kDetectionTol = 1e-10;

/// Matrix element of (id_4 (x) Gamma_t) between maximally entangled basis
/// projectors:
///   p = (1/16) (4 e^{-2t} d_am + 1 - e^{-2t})
///            * [2 (1 + e^{-2t}) d_bn + (1 - e^{-2t}) xi(b,n)]
double p_coeff(PauliIndex mu, PauliIndex nu, PauliIndex alpha, PauliIndex beta,
               double t);

/// The 16 eigenvalues of (id_4 (x) Gamma_t)[rho_I] in the maximally
/// entangled basis, indexed by site. They sum to one.
struct EvolvedSpectrum {
  double t;
  std::array<double, 16> values;
};

EvolvedSpectrum evolved_spectrum(LatticeSubset i, double t);

/// Trace pairing Tr[(id_4 (x) L)[P+] rho]; negative values certify
/// entanglement for positive L.
double witness_d(const SuperOperator& map4, const ComplexMatrix& rho16);

/// Per-site pairing values Tr[(id (x) Gamma_t)[P+] P_s] for reuse across
/// many subsets at the same time.
struct WitnessTable {
  double t;
  std::array<double, 16> site_pairing;
};

WitnessTable make_witness_table(double t);
std::vector<WitnessTable> make_witness_tables(std::span<const double> t_grid);

/// A column C_g and row R_d whose union meets the subset in exactly one
/// site, which moreover is not the intersection point (g,d). Such a lone
/// member forces a negative evolved eigenvalue at small times, so any PPT
/// subset carrying one is bound entangled.
struct ColumnRowWitness {
  Site corner;       // (g, d)
  Site sole_member;  // the unique member of the union
};

std::optional<ColumnRowWitness> find_column_row_witness(LatticeSubset i);

/// Relabel so the witness corner lands on (3,3) with the lone member at
/// (3,1); in this frame the evolved eigenvalue at (3,3) is -t/(2N) + O(t^2).
LatticeSubset witness_normal_form(LatticeSubset i);

enum class VerdictKind {
  NptEntangled,
  BoundEntangled,
  SeparableCertified,
  PptUndetermined,
};

struct Verdict {
  VerdictKind kind = VerdictKind::PptUndetermined;
  double pt_min_eigenvalue = 0.0;  // closed-form partial transpose minimum
  std::optional<ColumnRowWitness> column_row_witness;
  std::optional<double> detect_t;  // first grid time with a negative value
  std::optional<double> min_evolved_eigenvalue;  // at detect_t
  std::optional<double> witness_value;           // pairing at detect_t
  std::optional<CertificateKind> certificate;
};

const std::vector<double>& default_t_grid();

/// Verdict logic: NPT when the partial transpose fails; bound entangled on
/// any negativity evidence (combinatorial witness, evolved eigenvalue, or
/// pairing on the time grid); separable on a certificate; undetermined
/// otherwise. The table overload lets sweeps share the per-time pairing
/// tables.
Verdict classify(LatticeSubset i, std::span<const WitnessTable> tables,
                 double tol = kDetectionTol);
Verdict classify(LatticeSubset i, std::span<const double> t_grid,
                 double tol = kDetectionTol);
Verdict classify(LatticeSubset i);

}  // namespace lattice16

#endif  // LATTICE16_DETECTION_HPP
