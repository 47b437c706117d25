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

#include "lattice16/maps.hpp"

#include <cmath>
#include <stdexcept>

#include "lattice16/pauli.hpp"

namespace lattice16 {

namespace {

ComplexVector vectorize(const ComplexMatrix& rho) {
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index d) {
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": square matrix required");
}

}  // namespace

ComplexMatrix SuperOperator::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("SuperOperator::apply: dimension mismatch");
  return unvectorize(matrix * vectorize(rho), dim);
}

SuperOperator identity_superop(Eigen::Index d) {
  return SuperOperator{d, ComplexMatrix::Identity(d * d, d * d)};
}

SuperOperator sandwich_superop(const ComplexMatrix& a,
                               const ComplexMatrix& b) {
  require_square(a, "sandwich_superop");
  if (b.rows() != a.rows() || b.cols() != a.cols())
    throw std::invalid_argument("sandwich_superop: dimension mismatch");
  return SuperOperator{a.rows(), kron(b.transpose(), a)};
}

SuperOperator transpose_superop(Eigen::Index d) {
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i + d * j, j + d * i) = 1.0;
  return SuperOperator{d, std::move(m)};
}

SuperOperator trace_superop(Eigen::Index d) {
  const ComplexVector one = vectorize(ComplexMatrix::Identity(d, d));
  return SuperOperator{d, one * one.transpose()};
}

SuperOperator compose(const SuperOperator& a, const SuperOperator& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("compose: dimension mismatch");
  return SuperOperator{a.dim, a.matrix * b.matrix};
}

SuperOperator scale(Complex factor, const SuperOperator& a) {
  return SuperOperator{a.dim, factor * a.matrix};
}

SuperOperator add(const SuperOperator& a, const SuperOperator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("add: dimension mismatch");
  return SuperOperator{a.dim, a.matrix + b.matrix};
}

SuperOperator superop_tensor(const SuperOperator& a, const SuperOperator& b) {
  const Eigen::Index da = a.dim, db = b.dim, d = da * db;
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  // Entry convention: coefficient of rho_{kl} in L[rho]_{ij} sits at
  // (i + d*j, k + d*l). Composite indices split as i = a1*db + b1 etc.
  for (Eigen::Index a1 = 0; a1 < da; ++a1)
    for (Eigen::Index a2 = 0; a2 < da; ++a2)
      for (Eigen::Index c1 = 0; c1 < da; ++c1)
        for (Eigen::Index c2 = 0; c2 < da; ++c2) {
          const Complex fa = a.matrix(a1 + da * a2, c1 + da * c2);
          if (fa == Complex{0.0, 0.0}) continue;
          for (Eigen::Index b1 = 0; b1 < db; ++b1)
            for (Eigen::Index b2 = 0; b2 < db; ++b2)
              for (Eigen::Index e1 = 0; e1 < db; ++e1)
                for (Eigen::Index e2 = 0; e2 < db; ++e2) {
                  const Complex fb = b.matrix(b1 + db * b2, e1 + db * e2);
                  if (fb == Complex{0.0, 0.0}) continue;
                  const Eigen::Index row =
                      (a1 * db + b1) + d * (a2 * db + b2);
                  const Eigen::Index col =
                      (c1 * db + e1) + d * (c2 * db + e2);
                  m(row, col) = fa * fb;
                }
        }
  return SuperOperator{d, std::move(m)};
}

SuperOperator pairing_dual(const SuperOperator& m) {
  const Eigen::Index d = m.dim;
  ComplexMatrix out(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index l = 0; l < d; ++l)
          out(l + d * k, j + d * i) = m.matrix(i + d * j, k + d * l);
  return SuperOperator{d, std::move(out)};
}

ComplexMatrix apply_to_second(const SuperOperator& m, const ComplexMatrix& x,
                              Eigen::Index n) {
  const Eigen::Index d = m.dim;
  if (x.rows() != n * d || x.cols() != n * d)
    throw std::invalid_argument("apply_to_second: dimension mismatch");
  ComplexMatrix out(n * d, n * d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out.block(i * d, j * d, d, d) = m.apply(x.block(i * d, j * d, d, d));
  return out;
}

SuperOperator superop_from_kraus(const KrausSet& ks) {
  if (ks.operators.empty())
    throw std::invalid_argument("superop_from_kraus: no operators");
  const Eigen::Index d = ks.operators.front().rows();
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (const ComplexMatrix& g : ks.operators) {
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("superop_from_kraus: dimension mismatch");
    m += kron(g.conjugate(), g);
  }
  return SuperOperator{d, std::move(m)};
}

ComplexMatrix choi(const SuperOperator& m) {
  const Eigen::Index d = m.dim;
  ComplexMatrix c(d * d, d * d);
  ComplexMatrix unit = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      c.block(i * d, j * d, d, d) = m.apply(unit) / static_cast<double>(d);
      unit(i, j) = 0.0;
    }
  return c;
}

bool is_cp(const SuperOperator& m, double tol) {
  ComplexMatrix c = choi(m);
  // The Choi matrix of a hermiticity-preserving map is Hermitian up to
  // rounding; symmetrize before the PSD test.
  c = (c + c.adjoint().eval()) / 2.0;
  return is_psd(c, tol);
}

HermDecomposition HermDecomposition::from_coefficients(
    const ComplexMatrix& lambda, const std::vector<ComplexMatrix>& basis) {
  if (!is_hermitian(lambda))
    throw std::invalid_argument("from_coefficients: lambda not Hermitian");
  if (static_cast<Eigen::Index>(basis.size()) != lambda.rows())
    throw std::invalid_argument("from_coefficients: basis size mismatch");
  const Spectrum spec = hermitian_eigen(lambda);
  std::vector<double> values;
  std::vector<ComplexMatrix> ops;
  const Eigen::Index n = lambda.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    values.push_back(spec.eigenvalues(j));
    ComplexMatrix g = ComplexMatrix::Zero(basis.front().rows(),
                                          basis.front().cols());
    for (Eigen::Index k = 0; k < n; ++k)
      g += spec.eigenvectors(k, j) * basis[static_cast<size_t>(k)];
    ops.push_back(std::move(g));
  }
  return from_terms(std::move(values), std::move(ops));
}

HermDecomposition HermDecomposition::from_terms(
    std::vector<double> eigenvalues, std::vector<ComplexMatrix> operators) {
  if (eigenvalues.size() != operators.size())
    throw std::invalid_argument("from_terms: size mismatch");
  HermDecomposition h;
  for (size_t i = 0; i < operators.size(); ++i)
    for (size_t j = 0; j < operators.size(); ++j) {
      const Complex overlap = (operators[i].adjoint() * operators[j]).trace();
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > 1e-10)
        throw std::invalid_argument("from_terms: operators not orthonormal");
    }
  h.eigenvalues = std::move(eigenvalues);
  h.operators = std::move(operators);
  for (const ComplexMatrix& g : h.operators)
    h.norms.push_back(operator_norm(g));
  return h;
}

PositivityCheck positivity_certificate(const HermDecomposition& h) {
  int negative = -1;
  for (size_t j = 0; j < h.eigenvalues.size(); ++j)
    if (h.eigenvalues[j] < 0.0) {
      if (negative >= 0)
        throw std::invalid_argument(
            "positivity_certificate: more than one negative eigenvalue");
      negative = static_cast<int>(j);
    }
  if (negative < 0)
    throw std::invalid_argument(
        "positivity_certificate: no negative eigenvalue");
  const double m = h.norms[static_cast<size_t>(negative)] *
                   h.norms[static_cast<size_t>(negative)];
  if (m >= 1.0) return PositivityCheck::Inconclusive;
  const double bound =
      m / (1.0 - m) * std::abs(h.eigenvalues[static_cast<size_t>(negative)]);
  for (size_t j = 0; j < h.eigenvalues.size(); ++j)
    if (static_cast<int>(j) != negative &&
        h.eigenvalues[j] < bound - 1e-12)
      return PositivityCheck::Inconclusive;
  return PositivityCheck::CertifiedPositive;
}

SuperOperator gks_generator_superop(const GksGenerator& g) {
  if (!is_hermitian(g.hamiltonian))
    throw std::invalid_argument("gks_generator_superop: H not Hermitian");
  if (!is_hermitian(g.kossakowski))
    throw std::invalid_argument(
        "gks_generator_superop: coefficient matrix not Hermitian");
  const Eigen::Index d = g.hamiltonian.rows();
  const Eigen::Index n = g.kossakowski.rows();
  if (static_cast<Eigen::Index>(g.basis.size()) != n)
    throw std::invalid_argument("gks_generator_superop: basis size mismatch");
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex i_unit{0.0, 1.0};
  ComplexMatrix m = -i_unit * (kron(id, g.hamiltonian) -
                               kron(g.hamiltonian.transpose(), id));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex c = g.kossakowski(i, j);
      if (c == Complex{0.0, 0.0}) continue;
      const ComplexMatrix& fi = g.basis[static_cast<size_t>(i)];
      const ComplexMatrix& fj = g.basis[static_cast<size_t>(j)];
      const ComplexMatrix prod = fj.adjoint() * fi;
      m += c * (kron(fj.conjugate(), fi) -
                0.5 * kron(id, prod) - 0.5 * kron(prod.transpose(), id));
    }
  return SuperOperator{d, std::move(m)};
}

SuperOperator exp_generator(const SuperOperator& l, double t) {
  if (t < 0.0) throw std::invalid_argument("exp_generator: negative time");
  const Eigen::Index n = l.matrix.rows();
  ComplexMatrix a = t * l.matrix;
  // Scale until the norm is comfortably inside the series radius.
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5 && squarings < 60) {
    a /= 2.0;
    norm /= 2.0;
    ++squarings;
  }
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return SuperOperator{l.dim, std::move(result)};
}

std::vector<ComplexMatrix> qubit_gks_basis() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {inv_sqrt2 * pauli(1), inv_sqrt2 * pauli(2), inv_sqrt2 * pauli(3)};
}

GksGenerator depolarizing_generator() {
  GksGenerator g;
  g.hamiltonian = ComplexMatrix::Zero(2, 2);
  g.kossakowski = ComplexMatrix::Identity(3, 3);
  g.basis = qubit_gks_basis();
  return g;
}

GksGenerator transposing_generator() {
  GksGenerator g;
  g.hamiltonian = ComplexMatrix::Zero(2, 2);
  g.kossakowski = ComplexMatrix::Identity(3, 3);
  g.kossakowski(1, 1) = -1.0;
  g.basis = qubit_gks_basis();
  return g;
}

SuperOperator semigroup_map(SemigroupKind kind, double t) {
  if (t < 0.0) throw std::invalid_argument("semigroup_map: negative time");
  const double decay = std::exp(-2.0 * t);
  switch (kind) {
    case SemigroupKind::Gamma1:
      return add(scale(decay, identity_superop(2)),
                 scale(0.5 * (1.0 - decay), trace_superop(2)));
    case SemigroupKind::Gamma2:
      return add(scale(0.5 * (1.0 + decay), identity_superop(2)),
                 scale(0.5 * (1.0 - decay), transpose_superop(2)));
    case SemigroupKind::Gamma:
      return superop_tensor(semigroup_map(SemigroupKind::Gamma1, t),
                            semigroup_map(SemigroupKind::Gamma2, t));
  }
  throw std::invalid_argument("semigroup_map: unknown kind");
}

ProductMapDecomposition product_map_decomposition(double t) {
  if (t < 0.0)
    throw std::invalid_argument("product_map_decomposition: negative time");
  const double decay = std::exp(-2.0 * t);
  const SuperOperator trace_first =
      superop_tensor(trace_superop(2), identity_superop(2));
  const SuperOperator transpose_first =
      superop_tensor(transpose_superop(2), identity_superop(2));
  ProductMapDecomposition out{
      add(scale(decay * 0.5 * (1.0 + decay), identity_superop(4)),
          scale(0.25 * (1.0 - decay * decay), trace_first)),
      add(scale(0.5 * (1.0 - decay) * decay, transpose_first),
          scale(0.25 * (1.0 - decay) * (1.0 - decay), trace_first))};
  return out;
}

PositivityCheck tensor_positivity_certificate(const KossakowskiSpec& spec) {
  if (spec.c1.empty() || spec.c2.empty() || spec.negative_index < 0 ||
      spec.negative_index >= static_cast<int>(spec.c2.size()))
    throw std::invalid_argument("tensor_positivity_certificate: bad spec");
  for (double c : spec.c1)
    if (c <= 0.0)
      throw std::invalid_argument(
          "tensor_positivity_certificate: c1 entries must be positive");
  for (size_t l = 0; l < spec.c2.size(); ++l) {
    const bool should_be_negative =
        static_cast<int>(l) == spec.negative_index;
    if (should_be_negative != (spec.c2[l] < 0.0))
      throw std::invalid_argument(
          "tensor_positivity_certificate: sign pattern violated");
  }
  const double pivot =
      std::abs(spec.c2[static_cast<size_t>(spec.negative_index)]);
  for (double c : spec.c1)
    if (c < pivot - 1e-12) return PositivityCheck::Inconclusive;
  for (size_t l = 0; l < spec.c2.size(); ++l)
    if (static_cast<int>(l) != spec.negative_index &&
        spec.c2[l] < pivot - 1e-12)
      return PositivityCheck::Inconclusive;
  return PositivityCheck::CertifiedPositive;
}

}  // namespace lattice16
