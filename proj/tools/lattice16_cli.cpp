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
// Command line front end. Verbs:
//   sweep     classify every nonempty lattice subset and print a summary
//   inspect   full report for one subset
//   map-diag  Choi spectrum and decomposition diagnostics for the semigroups
//   orbits    equivalence classes with sizes and verdicts
//
// Exit codes: 0 clean, 1 usage error, 2 internal consistency violation.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lattice16/ppt.hpp"
#include "lattice16/report.hpp"

namespace l16 = lattice16;

namespace {

struct CommonOptions {
  std::vector<double> t_grid;
  double tolerance = 1e-10;
  int jobs = 0;
  std::string format = "json";
  std::string n_range;
  std::string out_path;
};

void add_sweep_options(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--t-grid", opts->t_grid,
                  "detection times (default: built-in grid)");
  cmd->add_option("--tol", opts->tolerance, "negativity tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", opts->jobs, "worker threads (0 = all cores)");
  cmd->add_option("--format", opts->format, "record format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--n-range", opts->n_range,
                  "restrict to subset sizes, e.g. 4:8");
  cmd->add_option("--out", opts->out_path, "write records to this file");
}

std::optional<std::pair<int, int>> parse_n_range(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int n = std::stoi(text);
    return std::make_pair(n, n);
  }
  return std::make_pair(std::stoi(text.substr(0, colon)),
                        std::stoi(text.substr(colon + 1)));
}

l16::SweepConfig to_config(const CommonOptions& opts, bool orbits_only) {
  l16::SweepConfig cfg;
  cfg.t_grid = opts.t_grid;
  cfg.tolerance = opts.tolerance;
  cfg.jobs = opts.jobs;
  cfg.format =
      opts.format == "csv" ? l16::RecordFormat::Csv : l16::RecordFormat::Json;
  cfg.n_range = parse_n_range(opts.n_range);
  cfg.orbits_only = orbits_only;
  return cfg;
}

void write_records(const l16::SweepResult& result, const l16::SweepConfig& cfg,
                   const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  if (cfg.format == l16::RecordFormat::Csv) {
    out << l16::kCsvHeader << '\n';
    for (const auto& r : result.records) out << l16::record_to_csv(r) << '\n';
  } else {
    for (const auto& r : result.records) out << l16::record_to_json(r) << '\n';
  }
}

l16::LatticeSubset subset_from_options(const std::string& sites_json,
                                       const std::string& mask_text) {
  if (!sites_json.empty()) return l16::subset_from_json(sites_json);
  if (!mask_text.empty())
    return l16::LatticeSubset{
        static_cast<std::uint16_t>(std::stoul(mask_text, nullptr, 0))};
  throw CLI::ValidationError("inspect", "need --sites or --mask");
}

int run_inspect(const std::string& sites_json, const std::string& mask_text,
                const CommonOptions& opts) {
  const l16::LatticeSubset subset = subset_from_options(sites_json, mask_text);
  if (subset.empty()) {
    std::cerr << "inspect: empty subset\n";
    return 1;
  }
  const std::vector<double>& grid =
      opts.t_grid.empty() ? l16::default_t_grid() : opts.t_grid;
  const auto tables = l16::make_witness_tables(grid);
  const auto record = l16::classify_record(subset, tables);

  std::cout << "subset " << l16::subset_to_json(subset) << "  mask 0x"
            << std::hex << subset.mask << std::dec << "  N=" << record.n
            << "\n\n"
            << l16::render_grid(subset) << '\n';
  std::cout << "PPT (combinatorial): "
            << (record.ppt_combinatorial ? "yes" : "no") << '\n';
  std::cout << "PPT (spectral):      " << (record.ppt_spectral ? "yes" : "no")
            << '\n';

  const auto closed =
      l16::pt_spectrum_closed_form(l16::WeightVector::uniform_on(subset));
  std::cout << "partial transpose spectrum (closed form, by site):\n";
  for (int b = 3; b >= 0; --b) {
    for (int a = 0; a < 4; ++a)
      std::cout << "  " << std::setw(9) << std::setprecision(4)
                << closed[4 * a + b];
    std::cout << '\n';
  }
  const auto spec = l16::hermitian_eigen(l16::partial_transpose(
      l16::lattice_state(subset).matrix, 4, 4, l16::Subsystem::First));
  std::cout << "partial transpose spectrum (diagonalized):\n ";
  for (int k = 0; k < 16; ++k)
    std::cout << ' ' << std::setprecision(4) << spec.eigenvalues(k);
  std::cout << "\n\n";

  std::cout << "evolved spectrum minimum and pairing by time:\n";
  for (const auto& table : tables) {
    const auto evolved = l16::evolved_spectrum(subset, table.t);
    double pairing = 0.0;
    for (const auto& s : subset.sites()) pairing += table.site_pairing[s.index()];
    pairing /= record.n;
    std::cout << "  t=" << std::setw(6) << table.t << "  min R="
              << std::setw(12) << std::setprecision(5)
              << *std::min_element(evolved.values.begin(),
                                   evolved.values.end())
              << "  D=" << std::setw(12) << pairing << '\n';
  }
  if (record.verdict.column_row_witness) {
    const auto& w = *record.verdict.column_row_witness;
    std::cout << "column/row witness: corner (" << w.corner.col.value << ','
              << w.corner.row.value << "), lone member ("
              << w.sole_member.col.value << ',' << w.sole_member.row.value
              << ")\n";
  }
  std::cout << "\nverdict: " << l16::verdict_name(record.verdict.kind);
  if (record.verdict.certificate)
    std::cout << "  [" << l16::certificate_name(*record.verdict.certificate)
              << ']';
  if (record.verdict.detect_t)
    std::cout << "  detected at t=" << *record.verdict.detect_t;
  std::cout << "\ncanonical mask 0x" << std::hex << record.canonical.mask
            << std::dec << ", orbit size " << record.orbit_size << '\n';
  if (record.verdict.kind == l16::VerdictKind::SeparableCertified) {
    const auto cert = l16::separability_certificate(subset);
    if (cert)
      std::cout << "certificate: " << l16::certificate_to_json(*cert) << '\n';
  }
  return 0;
}

int run_map_diag(const std::string& kind, double t) {
  l16::SuperOperator map{0, {}};
  if (kind == "gamma1")
    map = l16::semigroup_map(l16::SemigroupKind::Gamma1, t);
  else if (kind == "gamma2")
    map = l16::semigroup_map(l16::SemigroupKind::Gamma2, t);
  else if (kind == "Gamma")
    map = l16::semigroup_map(l16::SemigroupKind::Gamma, t);
  else if (kind == "Gamma2_component")
    map = l16::product_map_decomposition(t).transposed_part;
  else
    throw CLI::ValidationError("map-diag", "unknown kind " + kind);

  const auto choi_spectrum = l16::hermitian_eigen(
      ((l16::choi(map) + l16::choi(map).adjoint()) / 2.0).eval());
  std::cout << "kind " << kind << "  t=" << t << '\n';
  std::cout << "choi eigenvalues:";
  for (Eigen::Index k = 0; k < choi_spectrum.eigenvalues.size(); ++k)
    std::cout << ' ' << std::setprecision(6) << choi_spectrum.eigenvalues(k);
  std::cout << "\ncompletely positive: " << (l16::is_cp(map) ? "yes" : "no")
            << '\n';

  if (kind == "Gamma" || kind == "Gamma2_component") {
    const auto parts = l16::product_map_decomposition(t);
    const auto gamma = l16::semigroup_map(l16::SemigroupKind::Gamma, t);
    const auto recomposed = l16::add(
        parts.cp_part,
        l16::compose(parts.transposed_part, l16::transpose_superop(4)));
    std::cout << "decomposition residual: "
              << l16::max_abs(gamma.matrix - recomposed.matrix) << '\n';
  } else {
    const auto gen = kind == "gamma1" ? l16::depolarizing_generator()
                                      : l16::transposing_generator();
    const auto flowed =
        l16::exp_generator(l16::gks_generator_superop(gen), t);
    std::cout << "closed form vs exponential: "
              << l16::max_abs(map.matrix - flowed.matrix) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4x4 lattice states: PPT census, positive-map semigroup "
               "detection, separability certificates"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "classify all subsets");
  add_sweep_options(sweep, &sweep_opts);
  bool sweep_orbits = false;
  sweep->add_flag("--orbits", sweep_orbits, "one record per orbit");

  CommonOptions orbit_opts;
  CLI::App* orbits = app.add_subcommand("orbits", "equivalence classes");
  add_sweep_options(orbits, &orbit_opts);

  CommonOptions inspect_opts;
  std::string sites_json, mask_text;
  CLI::App* inspect = app.add_subcommand("inspect", "report for one subset");
  inspect->add_option("--sites", sites_json, "site list, e.g. [[0,2],[1,1]]");
  inspect->add_option("--mask", mask_text, "bit mask, e.g. 0x8e12");
  inspect->add_option("--t-grid", inspect_opts.t_grid, "detection times");

  std::string diag_kind = "Gamma";
  double diag_t = 0.0;
  CLI::App* diag = app.add_subcommand("map-diag", "semigroup diagnostics");
  diag->add_option("--kind", diag_kind,
                   "gamma1|gamma2|Gamma|Gamma2_component");
  diag->add_option("--t", diag_t, "time")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sweep->parsed()) {
      const auto cfg = to_config(sweep_opts, sweep_orbits);
      const auto result = l16::run_sweep(cfg);
      write_records(result, cfg, sweep_opts.out_path);
      std::cout << l16::summary_table(result);
      return 0;
    }
    if (orbits->parsed()) {
      auto cfg = to_config(orbit_opts, true);
      const auto result = l16::run_sweep(cfg);
      write_records(result, cfg, orbit_opts.out_path);
      std::cout << "classes by subset size (one row per orbit "
                   "representative):\n"
                << l16::summary_table(result);
      return 0;
    }
    if (inspect->parsed())
      return run_inspect(sites_json, mask_text, inspect_opts);
    if (diag->parsed()) return run_map_diag(diag_kind, diag_t);
  } catch (const l16::ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
