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

#include "lattice16/separability.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "lattice16/ppt.hpp"

namespace lattice16 {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexVector ket4(int index) {
  ComplexVector v = ComplexVector::Zero(4);
  v(index) = 1.0;
  return v;
}

// Transport every product factor through the local unitaries of a
// relabeling: a (x) b -> (U* a) (x) (W b).
ProductEnsemble transport(const ProductEnsemble& e, const LatticeSymmetry& g) {
  ProductEnsemble out;
  out.weights = e.weights;
  out.factors.reserve(e.factors.size());
  for (const auto& [a, b] : e.factors)
    out.factors.emplace_back(g.u.conjugate() * a, g.w * b);
  return out;
}

// The rank-14 representative: everything except two sites in the top-right
// corner. It splits into two 2x2 blocks and one 2x3 block, each separately
// separable.
const LatticeSubset kRank14Representative =
    LatticeSubset::full()
        .without(Site{PauliIndex(2), PauliIndex(3)})
        .without(Site{PauliIndex(3), PauliIndex(3)});

const LatticeSubset kRank14LowBlock = LatticeSubset::from_sites(
    {Site{PauliIndex(0), PauliIndex(0)}, Site{PauliIndex(1), PauliIndex(0)},
     Site{PauliIndex(0), PauliIndex(1)}, Site{PauliIndex(1), PauliIndex(1)}});

const LatticeSubset kRank14HighBlock = LatticeSubset::from_sites(
    {Site{PauliIndex(0), PauliIndex(2)}, Site{PauliIndex(1), PauliIndex(2)},
     Site{PauliIndex(0), PauliIndex(3)}, Site{PauliIndex(1), PauliIndex(3)}});

const LatticeSubset kRank14WideBlock = LatticeSubset::from_sites(
    {Site{PauliIndex(2), PauliIndex(0)}, Site{PauliIndex(3), PauliIndex(0)},
     Site{PauliIndex(2), PauliIndex(1)}, Site{PauliIndex(3), PauliIndex(1)},
     Site{PauliIndex(2), PauliIndex(2)}, Site{PauliIndex(3), PauliIndex(2)}});

// Representative whose fidelity against the symmetric projector vanishes.
const LatticeSubset kIsotropic15Representative =
    LatticeSubset::full().without(Site{PauliIndex(0), PauliIndex(0)});

}  // namespace

ComplexMatrix ProductEnsemble::mixture() const {
  ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
  for (size_t i = 0; i < weights.size(); ++i) {
    const ComplexVector v = kron(factors[i].first, factors[i].second);
    rho += weights[i] * (v * v.adjoint());
  }
  return rho;
}

LatticeSubset rank6_block_subset() {
  return LatticeSubset::from_sites(
      {Site{PauliIndex(0), PauliIndex(0)}, Site{PauliIndex(0), PauliIndex(1)},
       Site{PauliIndex(0), PauliIndex(2)}, Site{PauliIndex(3), PauliIndex(0)},
       Site{PauliIndex(3), PauliIndex(1)},
       Site{PauliIndex(3), PauliIndex(2)}});
}

ProductEnsemble rank6_block_ensemble() {
  ProductEnsemble e;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Two-qubit kets inside each C^4 factor, ordered |00>,|01>,|10>,|11>.
  const ComplexVector k00 = ket4(0), k01 = ket4(1), k10 = ket4(2),
                      k11 = ket4(3);
  const auto push = [&e](const ComplexVector& a, const ComplexVector& b) {
    e.weights.push_back(1.0 / 12.0);
    e.factors.emplace_back(a, b);
  };
  for (const double sign : {1.0, -1.0}) {
    push(inv_sqrt2 * (k00 + sign * k01), inv_sqrt2 * (k00 + sign * k01));
    push(inv_sqrt2 * (k00 + sign * kI * k01),
         inv_sqrt2 * (k00 - sign * kI * k01));
    push(inv_sqrt2 * (k10 + sign * k11), inv_sqrt2 * (k10 + sign * k11));
    push(inv_sqrt2 * (k10 + sign * kI * k11),
         inv_sqrt2 * (k10 - sign * kI * k11));
  }
  push(k00, k01);
  push(k01, k00);
  push(k10, k11);
  push(k11, k10);
  return e;
}

bool verify_ensemble(const ComplexMatrix& rho, const ProductEnsemble& e,
                     double tol) {
  if (rho.rows() != 16 || rho.cols() != 16) return false;
  if (e.weights.size() != e.factors.size() || e.weights.empty()) return false;
  double sum = 0.0;
  for (double w : e.weights) {
    if (w < 0.0) return false;
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) return false;
  for (const auto& [a, b] : e.factors) {
    if (a.size() != 4 || b.size() != 4) return false;
    if (std::abs(a.norm() - 1.0) > 1e-10 || std::abs(b.norm() - 1.0) > 1e-10)
      return false;
  }
  return max_abs(rho - e.mixture()) <= tol;
}

std::optional<SeparabilityCertificate> separability_certificate(
    LatticeSubset i) {
  if (i.empty())
    throw std::invalid_argument("separability_certificate: empty subset");
  const int n = i.size();

  if (n <= 4 && ppt_combinatorial(i)) {
    SeparabilityCertificate cert;
    cert.kind = CertificateKind::Rank4Rule;
    cert.note = "literature-backed: PPT states of rank at most four";
    return cert;
  }

  if (n == 15) {
    const auto g = find_symmetry(i, kIsotropic15Representative);
    if (!g)
      throw std::runtime_error(
          "separability_certificate: rank-15 subset outside the expected "
          "orbit");
    const ComplexMatrix rho = lattice_state(g->apply(i)).matrix;
    const double fidelity =
        (basis_projector(Site{PauliIndex(0), PauliIndex(0)}) * rho)
            .trace()
            .real();
    if (std::abs(fidelity) > 1e-12)
      throw std::runtime_error(
          "separability_certificate: isotropic fidelity not zero");
    SeparabilityCertificate cert;
    cert.kind = CertificateKind::Isotropic15;
    cert.fidelity = fidelity;
    cert.note = "isotropic state with vanishing symmetric-projector fidelity";
    return cert;
  }

  if (canonical_form(i) == canonical_form(rank6_block_subset())) {
    const auto g = find_symmetry(rank6_block_subset(), i);
    if (!g)
      throw std::runtime_error(
          "separability_certificate: no relabeling onto the rank-6 block");
    SeparabilityCertificate cert;
    cert.kind = CertificateKind::Rank6Explicit;
    cert.ensemble = transport(rank6_block_ensemble(), *g);
    if (!verify_ensemble(lattice_state(i).matrix, *cert.ensemble, 1e-10))
      throw std::runtime_error(
          "separability_certificate: transported ensemble failed to verify");
    return cert;
  }

  if (n == 14) {
    const auto g = find_symmetry(kRank14Representative, i);
    if (!g)
      throw std::runtime_error(
          "separability_certificate: rank-14 subset outside the expected "
          "orbit");
    SeparabilityCertificate cert;
    cert.kind = CertificateKind::Rank14Convex;
    cert.pieces = {
        ConvexPiece{g->apply(kRank14LowBlock), 4.0 / 14.0,
                    CertificateKind::Rank4Rule},
        ConvexPiece{g->apply(kRank14HighBlock), 4.0 / 14.0,
                    CertificateKind::Rank4Rule},
        ConvexPiece{g->apply(kRank14WideBlock), 6.0 / 14.0,
                    CertificateKind::Rank6Explicit},
    };
    // The pieces partition the subset, so the convex identity is exact;
    // assert it anyway along with each piece's own certificate.
    ComplexMatrix mix = ComplexMatrix::Zero(16, 16);
    for (const ConvexPiece& piece : cert.pieces) {
      const auto sub = separability_certificate(piece.subset);
      if (!sub || sub->kind != piece.kind)
        throw std::runtime_error(
            "separability_certificate: rank-14 piece not certified");
      mix += piece.weight * lattice_state(piece.subset).matrix;
    }
    if (max_abs(mix - lattice_state(i).matrix) > 1e-12)
      throw std::runtime_error(
          "separability_certificate: rank-14 convex identity failed");
    cert.note = "convex split into two rank-4 blocks and one rank-6 block";
    return cert;
  }

  return std::nullopt;
}

std::string certificate_to_json(const SeparabilityCertificate& cert) {
  using nlohmann::json;
  const auto kind_name = [](CertificateKind k) {
    switch (k) {
      case CertificateKind::Rank4Rule: return "RANK4_RULE";
      case CertificateKind::Isotropic15: return "ISOTROPIC15";
      case CertificateKind::Rank6Explicit: return "RHO6_EXPLICIT";
      case CertificateKind::Rank14Convex: return "RANK14_CONVEX";
      case CertificateKind::Ensemble: return "ENSEMBLE";
    }
    return "";
  };
  const auto vector_pairs = [](const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k)
      out.push_back({v(k).real(), v(k).imag()});
    return out;
  };
  json out;
  out["kind"] = kind_name(cert.kind);
  if (!cert.note.empty()) out["note"] = cert.note;
  if (cert.fidelity) out["fidelity"] = *cert.fidelity;
  if (cert.ensemble) {
    out["weights"] = cert.ensemble->weights;
    json factors = json::array();
    for (const auto& [a, b] : cert.ensemble->factors)
      factors.push_back({{"a", vector_pairs(a)}, {"b", vector_pairs(b)}});
    out["factors"] = std::move(factors);
  }
  if (!cert.pieces.empty()) {
    json pieces = json::array();
    for (const ConvexPiece& piece : cert.pieces)
      pieces.push_back({{"sites", json::parse(subset_to_json(piece.subset))},
                        {"weight", piece.weight},
                        {"kind", kind_name(piece.kind)}});
    out["pieces"] = std::move(pieces);
  }
  return out.dump();
}

}  // namespace lattice16
