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

#include "lattice16/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lattice16/ppt.hpp"

namespace lattice16 {

using nlohmann::json;

bool ClassificationRecord::operator==(const ClassificationRecord& other) const {
  const auto near = [](std::optional<double> a, std::optional<double> b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || std::abs(*a - *b) <= 1e-12;
  };
  const auto witness_eq = [](const std::optional<ColumnRowWitness>& a,
                             const std::optional<ColumnRowWitness>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->corner == b->corner && a->sole_member == b->sole_member);
  };
  return subset == other.subset && n == other.n &&
         ppt_combinatorial == other.ppt_combinatorial &&
         ppt_spectral == other.ppt_spectral &&
         verdict.kind == other.verdict.kind &&
         near(verdict.pt_min_eigenvalue, other.verdict.pt_min_eigenvalue) &&
         witness_eq(verdict.column_row_witness,
                    other.verdict.column_row_witness) &&
         near(verdict.detect_t, other.verdict.detect_t) &&
         near(verdict.min_evolved_eigenvalue,
              other.verdict.min_evolved_eigenvalue) &&
         near(verdict.witness_value, other.verdict.witness_value) &&
         verdict.certificate == other.verdict.certificate &&
         canonical == other.canonical && orbit_size == other.orbit_size;
}

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NptEntangled: return "NPT_ENTANGLED";
    case VerdictKind::BoundEntangled: return "BOUND_ENTANGLED";
    case VerdictKind::SeparableCertified: return "SEPARABLE_CERTIFIED";
    case VerdictKind::PptUndetermined: return "PPT_UNDETERMINED";
  }
  throw std::invalid_argument("verdict_name: unknown kind");
}

VerdictKind verdict_from_name(const std::string& name) {
  if (name == "NPT_ENTANGLED") return VerdictKind::NptEntangled;
  if (name == "BOUND_ENTANGLED") return VerdictKind::BoundEntangled;
  if (name == "SEPARABLE_CERTIFIED") return VerdictKind::SeparableCertified;
  if (name == "PPT_UNDETERMINED") return VerdictKind::PptUndetermined;
  throw std::invalid_argument("verdict_from_name: " + name);
}

const char* certificate_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Rank4Rule: return "RANK4_RULE";
    case CertificateKind::Isotropic15: return "ISOTROPIC15";
    case CertificateKind::Rank6Explicit: return "RHO6_EXPLICIT";
    case CertificateKind::Rank14Convex: return "RANK14_CONVEX";
    case CertificateKind::Ensemble: return "ENSEMBLE";
  }
  throw std::invalid_argument("certificate_name: unknown kind");
}

CertificateKind certificate_from_name(const std::string& name) {
  if (name == "RANK4_RULE") return CertificateKind::Rank4Rule;
  if (name == "ISOTROPIC15") return CertificateKind::Isotropic15;
  if (name == "RHO6_EXPLICIT") return CertificateKind::Rank6Explicit;
  if (name == "RANK14_CONVEX") return CertificateKind::Rank14Convex;
  if (name == "ENSEMBLE") return CertificateKind::Ensemble;
  throw std::invalid_argument("certificate_from_name: " + name);
}

namespace {

std::string mask_hex(std::uint16_t mask) {
  std::ostringstream out;
  out << "0x" << std::hex << std::setw(4) << std::setfill('0') << mask;
  return out.str();
}

}  // namespace

ClassificationRecord classify_record(LatticeSubset i,
                                     std::span<const WitnessTable> tables,
                                     double tol) {
  ClassificationRecord r;
  r.subset = i;
  r.n = i.size();
  r.ppt_combinatorial = ppt_combinatorial(i);
  r.ppt_spectral = ppt_spectral(lattice_state(i));
  if (r.ppt_combinatorial != r.ppt_spectral)
    throw ConsistencyError("PPT routes disagree on mask " +
                           mask_hex(i.mask));
  r.verdict = classify(i, tables, tol);
  if (r.verdict.kind == VerdictKind::SeparableCertified &&
      (r.verdict.column_row_witness || r.verdict.detect_t))
    throw ConsistencyError("certificate clashes with detection on mask " +
                           mask_hex(i.mask));
  r.canonical = canonical_form(i);
  r.orbit_size = orbit_size(i);
  return r;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  const std::vector<double>& grid =
      cfg.t_grid.empty() ? default_t_grid() : cfg.t_grid;
  const std::vector<WitnessTable> tables = make_witness_tables(grid);
  const int n_lo = cfg.n_range ? cfg.n_range->first : 1;
  const int n_hi = cfg.n_range ? cfg.n_range->second : 16;

  std::vector<std::uint16_t> masks;
  masks.reserve(65535);
  for (std::uint32_t mask = 1; mask < 65536; ++mask) {
    const LatticeSubset subset{static_cast<std::uint16_t>(mask)};
    const int n = subset.size();
    if (n < n_lo || n > n_hi) continue;
    if (cfg.orbits_only && canonical_form(subset) != subset) continue;
    masks.push_back(static_cast<std::uint16_t>(mask));
  }

  std::vector<ClassificationRecord> records(masks.size());
  std::vector<std::string> errors;
  std::mutex error_mutex;
  const unsigned worker_count = cfg.jobs > 0
                                    ? static_cast<unsigned>(cfg.jobs)
                                    : std::max(1u, std::thread::hardware_concurrency());
  // Warm the shared lazy tables before the workers race to build them.
  (void)lattice_symmetries();
  (void)canonical_form(LatticeSubset{1});
  (void)basis_projector(Site::from_index(0));

  std::vector<std::thread> workers;
  std::atomic<size_t> cursor{0};
  for (unsigned w = 0; w < worker_count; ++w)
    workers.emplace_back([&] {
      while (true) {
        const size_t at = cursor.fetch_add(64);
        if (at >= masks.size()) return;
        const size_t end = std::min(at + 64, masks.size());
        for (size_t k = at; k < end; ++k) {
          try {
            records[k] =
                classify_record(LatticeSubset{masks[k]}, tables, cfg.tolerance);
          } catch (const std::exception& e) {
            const std::scoped_lock lock(error_mutex);
            errors.emplace_back(e.what());
            return;
          }
        }
      }
    });
  for (std::thread& t : workers) t.join();
  if (!errors.empty()) throw ConsistencyError(errors.front());

  SweepResult result;
  result.records = std::move(records);
  for (int n = 1; n <= 16; ++n) result.summary[n - 1].n = n;
  // With orbits_only the rows count equivalence classes, not subsets.
  for (const ClassificationRecord& r : result.records) {
    SummaryRow& row = result.summary[r.n - 1];
    row.total += 1;
    if (r.ppt_combinatorial) row.ppt += 1;
    switch (r.verdict.kind) {
      case VerdictKind::NptEntangled: row.npt += 1; break;
      case VerdictKind::BoundEntangled: row.bound += 1; break;
      case VerdictKind::SeparableCertified: row.separable += 1; break;
      case VerdictKind::PptUndetermined: row.undetermined += 1; break;
    }
  }
  return result;
}

std::string record_to_json(const ClassificationRecord& r) {
  json evidence;
  evidence["pt_min_eigenvalue"] = r.verdict.pt_min_eigenvalue;
  if (r.verdict.column_row_witness) {
    const ColumnRowWitness& w = *r.verdict.column_row_witness;
    evidence["column_row_witness"] = {
        {"corner", {w.corner.col.value, w.corner.row.value}},
        {"sole_member", {w.sole_member.col.value, w.sole_member.row.value}}};
  }
  if (r.verdict.detect_t) evidence["detect_t"] = *r.verdict.detect_t;
  if (r.verdict.min_evolved_eigenvalue)
    evidence["min_evolved_eigenvalue"] = *r.verdict.min_evolved_eigenvalue;
  if (r.verdict.witness_value)
    evidence["witness_value"] = *r.verdict.witness_value;
  if (r.verdict.certificate)
    evidence["certificate"] = certificate_name(*r.verdict.certificate);

  json out;
  out["mask"] = r.subset.mask;
  out["mask_hex"] = mask_hex(r.subset.mask);
  out["sites"] = json::parse(subset_to_json(r.subset));
  out["n"] = r.n;
  out["ppt_combinatorial"] = r.ppt_combinatorial;
  out["ppt_spectral"] = r.ppt_spectral;
  out["verdict"] = verdict_name(r.verdict.kind);
  out["evidence"] = evidence;
  out["canonical_mask"] = r.canonical.mask;
  out["orbit_size"] = r.orbit_size;
  return out.dump();
}

ClassificationRecord record_from_json(const std::string& text) {
  const json in = json::parse(text);
  ClassificationRecord r;
  r.subset = LatticeSubset{in.at("mask").get<std::uint16_t>()};
  r.n = in.at("n").get<int>();
  r.ppt_combinatorial = in.at("ppt_combinatorial").get<bool>();
  r.ppt_spectral = in.at("ppt_spectral").get<bool>();
  r.verdict.kind = verdict_from_name(in.at("verdict").get<std::string>());
  const json& evidence = in.at("evidence");
  r.verdict.pt_min_eigenvalue = evidence.at("pt_min_eigenvalue").get<double>();
  if (evidence.contains("column_row_witness")) {
    const json& w = evidence.at("column_row_witness");
    r.verdict.column_row_witness = ColumnRowWitness{
        Site{PauliIndex(w.at("corner")[0].get<int>()),
             PauliIndex(w.at("corner")[1].get<int>())},
        Site{PauliIndex(w.at("sole_member")[0].get<int>()),
             PauliIndex(w.at("sole_member")[1].get<int>())}};
  }
  if (evidence.contains("detect_t"))
    r.verdict.detect_t = evidence.at("detect_t").get<double>();
  if (evidence.contains("min_evolved_eigenvalue"))
    r.verdict.min_evolved_eigenvalue =
        evidence.at("min_evolved_eigenvalue").get<double>();
  if (evidence.contains("witness_value"))
    r.verdict.witness_value = evidence.at("witness_value").get<double>();
  if (evidence.contains("certificate"))
    r.verdict.certificate =
        certificate_from_name(evidence.at("certificate").get<std::string>());
  r.canonical = LatticeSubset{in.at("canonical_mask").get<std::uint16_t>()};
  r.orbit_size = in.at("orbit_size").get<std::uint32_t>();
  return r;
}

const char* const kCsvHeader =
    "mask_hex,N_I,ppt,verdict,evidence_t,certificate,canonical_mask,"
    "orbit_size";

std::string record_to_csv(const ClassificationRecord& r) {
  std::ostringstream out;
  out << mask_hex(r.subset.mask) << ',' << r.n << ','
      << (r.ppt_combinatorial ? 1 : 0) << ',' << verdict_name(r.verdict.kind)
      << ',';
  if (r.verdict.detect_t) out << *r.verdict.detect_t;
  out << ',';
  if (r.verdict.certificate) out << certificate_name(*r.verdict.certificate);
  out << ',' << mask_hex(r.canonical.mask) << ',' << r.orbit_size;
  return out.str();
}

std::string summary_table(const SweepResult& result) {
  std::ostringstream out;
  out << "  N     total       PPT       NPT     bound separable undetermined\n";
  SummaryRow all;
  for (const SummaryRow& row : result.summary) {
    if (row.total == 0) continue;
    out << std::setw(3) << row.n << std::setw(10) << row.total
        << std::setw(10) << row.ppt << std::setw(10) << row.npt
        << std::setw(10) << row.bound << std::setw(10) << row.separable
        << std::setw(13) << row.undetermined << '\n';
    all.total += row.total;
    all.ppt += row.ppt;
    all.npt += row.npt;
    all.bound += row.bound;
    all.separable += row.separable;
    all.undetermined += row.undetermined;
  }
  out << "all" << std::setw(10) << all.total << std::setw(10) << all.ppt
      << std::setw(10) << all.npt << std::setw(10) << all.bound
      << std::setw(10) << all.separable << std::setw(13) << all.undetermined
      << '\n';
  return out.str();
}

}  // namespace lattice16
