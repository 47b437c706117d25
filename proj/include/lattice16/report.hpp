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
// Exhaustive classification sweep over all nonempty lattice subsets, with
// JSON/CSV record emission and an internal cross-check between the
// combinatorial and spectral PPT routes.

#ifndef LATTICE16_REPORT_HPP
#define LATTICE16_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice16/detection.hpp"

namespace lattice16 {

/// Raised when two routes that must agree do not (exit code 2 in the CLI).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassificationRecord {
  LatticeSubset subset;
  int n = 0;
  bool ppt_combinatorial = false;
  bool ppt_spectral = false;
  Verdict verdict;
  LatticeSubset canonical;
  std::uint32_t orbit_size = 0;

  bool operator==(const ClassificationRecord& other) const;
};

enum class RecordFormat { Json, Csv };

struct SweepConfig {
  std::vector<double> t_grid;          // empty selects the default grid
  double tolerance = kDetectionTol;
  int jobs = 0;                        // 0 selects hardware concurrency
  RecordFormat format = RecordFormat::Json;
  std::optional<std::pair<int, int>> n_range;  // inclusive
  bool orbits_only = false;            // one record per canonical form
};

struct SummaryRow {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t ppt = 0;
  std::uint64_t npt = 0;
  std::uint64_t bound = 0;
  std::uint64_t separable = 0;
  std::uint64_t undetermined = 0;
};

struct SweepResult {
  std::vector<ClassificationRecord> records;
  std::array<SummaryRow, 16> summary;  // by subset size, 1-based at index n-1
};

/// Classifies every nonempty subset in range. Deterministic and independent
/// of the worker count. Throws ConsistencyError if the two PPT routes ever
/// disagree or a separability certificate clashes with a detection verdict.
SweepResult run_sweep(const SweepConfig& cfg);

ClassificationRecord classify_record(LatticeSubset i,
                                     std::span<const WitnessTable> tables,
                                     double tol = kDetectionTol);

const char* verdict_name(VerdictKind kind);
VerdictKind verdict_from_name(const std::string& name);
const char* certificate_name(CertificateKind kind);
CertificateKind certificate_from_name(const std::string& name);

std::string record_to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const std::string& text);

extern const char* const kCsvHeader;
std::string record_to_csv(const ClassificationRecord& r);

std::string summary_table(const SweepResult& result);

}  // namespace lattice16

#endif  // LATTICE16_REPORT_HPP
