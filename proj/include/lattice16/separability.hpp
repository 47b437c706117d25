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
// Positive separability certificates for lattice states: the rank-4 rule,
// the rank-15 isotropic argument, an explicit product decomposition for the
// rank-6 block class, and the rank-14 convex combination of the three.

#ifndef LATTICE16_SEPARABILITY_HPP
#define LATTICE16_SEPARABILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice16/equivalence.hpp"
#include "lattice16/states.hpp"

namespace lattice16 {

/// Convex mixture of projectors onto product vectors across the C^4 (x) C^4
/// cut.
struct ProductEnsemble {
  std::vector<double> weights;
  std::vector<std::pair<ComplexVector, ComplexVector>> factors;

  ComplexMatrix mixture() const;  // 16x16
};

/// The rank-6 reference state: two columns by three rows.
LatticeSubset rank6_block_subset();

/// Twelve-member product decomposition of the rank-6 reference state, each
/// member of weight 1/12.
ProductEnsemble rank6_block_ensemble();

/// True iff the ensemble is well formed (unit-norm C^4 factors, weights
/// summing to one) and its mixture equals rho within tol entrywise.
bool verify_ensemble(const ComplexMatrix& rho, const ProductEnsemble& e,
                     double tol);

enum class CertificateKind {
  Rank4Rule,
  Isotropic15,
  Rank6Explicit,
  Rank14Convex,
  Ensemble,
};

/// One summand of a convex split into separable pieces.
struct ConvexPiece {
  LatticeSubset subset;
  double weight;
  CertificateKind kind;
};

struct SeparabilityCertificate {
  CertificateKind kind;
  std::optional<ProductEnsemble> ensemble;  // verified when present
  std::vector<ConvexPiece> pieces;          // rank-14 split
  std::optional<double> fidelity;           // isotropic argument
  std::string note;
};

/// Issues a certificate where one of the four arguments applies; empty
/// otherwise. Issued ensembles are always verified before return.
std::optional<SeparabilityCertificate> separability_certificate(
    LatticeSubset i);

/// JSON payload: kind, note, fidelity when present, convex pieces when
/// present, and the ensemble with factor vectors as [re, im] pairs.
std::string certificate_to_json(const SeparabilityCertificate& cert);

}  // namespace lattice16

#endif  // LATTICE16_SEPARABILITY_HPP
