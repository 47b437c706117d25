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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattice16/ppt.hpp"
#include "lattice16/report.hpp"

namespace py = pybind11;
using namespace lattice16;

namespace {

LatticeSubset subset_of(std::uint16_t mask) { return LatticeSubset{mask}; }

SemigroupKind kind_of(const std::string& name) {
  if (name == "gamma1") return SemigroupKind::Gamma1;
  if (name == "gamma2") return SemigroupKind::Gamma2;
  if (name == "Gamma") return SemigroupKind::Gamma;
  throw std::invalid_argument("unknown semigroup kind: " + name);
}

py::dict verdict_dict(const Verdict& v) {
  py::dict out;
  out["verdict"] = verdict_name(v.kind);
  out["pt_min_eigenvalue"] = v.pt_min_eigenvalue;
  if (v.column_row_witness) {
    const auto& w = *v.column_row_witness;
    out["witness_corner"] =
        py::make_tuple(w.corner.col.value, w.corner.row.value);
    out["witness_sole_member"] =
        py::make_tuple(w.sole_member.col.value, w.sole_member.row.value);
  }
  if (v.detect_t) out["detect_t"] = *v.detect_t;
  if (v.min_evolved_eigenvalue)
    out["min_evolved_eigenvalue"] = *v.min_evolved_eigenvalue;
  if (v.witness_value) out["witness_value"] = *v.witness_value;
  if (v.certificate) out["certificate"] = certificate_name(*v.certificate);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "4x4 lattice states: PPT tests, positive-map semigroups, "
            "entanglement classification";

  m.def("pauli", [](int a) { return pauli(PauliIndex(a)); }, py::arg("alpha"));
  m.def("epsilon", [](int a) { return epsilon(PauliIndex(a)); });
  m.def("xi", [](int a, int g) { return xi(PauliIndex(a), PauliIndex(g)); });
  m.def("eta", [](int a, int g) { return eta(PauliIndex(a), PauliIndex(g)); });
  m.def("sigma_ab", [](int a, int b) {
    return sigma_ab(Site{PauliIndex(a), PauliIndex(b)});
  });
  m.def("psi_plus", &psi_plus, py::arg("d"));
  m.def("basis_projector", [](int a, int b) {
    return basis_projector(Site{PauliIndex(a), PauliIndex(b)});
  });
  m.def("flip_v", &flip_v, py::arg("d"));
  m.def("v_ab", [](int a, int b) {
    return v_ab(Site{PauliIndex(a), PauliIndex(b)});
  });

  m.def("mask_from_sites", [](const std::vector<std::pair<int, int>>& sites) {
    LatticeSubset out;
    for (const auto& [a, b] : sites)
      out = out.with(Site{PauliIndex(a), PauliIndex(b)});
    return out.mask;
  });
  m.def("sites_of_mask", [](std::uint16_t mask) {
    std::vector<std::pair<int, int>> out;
    for (const Site& s : subset_of(mask).sites())
      out.emplace_back(s.col.value, s.row.value);
    return out;
  });
  m.def("render_grid", [](std::uint16_t mask) {
    return render_grid(subset_of(mask));
  });
  m.def("parse_grid", [](const std::string& text) {
    return parse_grid(text).mask;
  });
  m.def("state_matrix", [](std::uint16_t mask) {
    return lattice_state(subset_of(mask)).matrix;
  });

  m.def("ppt_combinatorial", [](std::uint16_t mask) {
    return ppt_combinatorial(subset_of(mask));
  });
  m.def("ppt_spectral", [](std::uint16_t mask) {
    return ppt_spectral(lattice_state(subset_of(mask)));
  });
  m.def("pt_spectrum", [](std::uint16_t mask) {
    const auto values =
        pt_spectrum_closed_form(WeightVector::uniform_on(subset_of(mask)));
    return std::vector<double>(values.begin(), values.end());
  });

  m.def("semigroup_superop", [](const std::string& kind, double t) {
    return semigroup_map(kind_of(kind), t).matrix;
  });
  m.def("semigroup_is_cp", [](const std::string& kind, double t) {
    if (kind == "Gamma2_component")
      return is_cp(product_map_decomposition(t).transposed_part);
    return is_cp(semigroup_map(kind_of(kind), t));
  });
  m.def("choi_matrix", [](const std::string& kind, double t) {
    return choi(semigroup_map(kind_of(kind), t));
  });
  m.attr("cp_transition_time") = kCpTransitionTime;

  m.def("p_coeff", [](int mu, int nu, int alpha, int beta, double t) {
    return p_coeff(PauliIndex(mu), PauliIndex(nu), PauliIndex(alpha),
                   PauliIndex(beta), t);
  });
  m.def("evolved_spectrum", [](std::uint16_t mask, double t) {
    const auto spectrum = evolved_spectrum(subset_of(mask), t);
    return std::vector<double>(spectrum.values.begin(),
                               spectrum.values.end());
  });
  m.def("witness_value", [](std::uint16_t mask, double t) {
    const auto table = make_witness_table(t);
    double pairing = 0.0;
    const auto subset = subset_of(mask);
    for (const Site& s : subset.sites()) pairing += table.site_pairing[s.index()];
    return pairing / subset.size();
  });

  m.def("canonical_form", [](std::uint16_t mask) {
    return canonical_form(subset_of(mask)).mask;
  });
  m.def("orbit_size", [](std::uint16_t mask) {
    return orbit_size(subset_of(mask));
  });
  m.def("orbit", [](std::uint16_t mask) {
    std::vector<std::uint16_t> out;
    for (const LatticeSubset& s : orbit(subset_of(mask))) out.push_back(s.mask);
    return out;
  });

  m.def("classify", [](std::uint16_t mask, std::optional<std::vector<double>> grid) {
      const Verdict v = grid ? classify(subset_of(mask),
                                        std::span<const double>(*grid))
                             : classify(subset_of(mask));
      return verdict_dict(v);
    },
    py::arg("mask"), py::arg("t_grid") = std::nullopt);

  m.def("separability_certificate_kind",
        [](std::uint16_t mask) -> std::optional<std::string> {
          const auto cert = separability_certificate(subset_of(mask));
          if (!cert) return std::nullopt;
          return std::string(certificate_name(cert->kind));
        });

  m.def("record_json", [](std::uint16_t mask) {
    const auto tables = make_witness_tables(default_t_grid());
    return record_to_json(classify_record(subset_of(mask), tables));
  });

  m.def("sweep_summary", [](int n_lo, int n_hi, int jobs) {
      SweepConfig cfg;
      cfg.n_range = std::make_pair(n_lo, n_hi);
      cfg.jobs = jobs;
      const SweepResult result = run_sweep(cfg);
      py::list rows;
      for (const SummaryRow& row : result.summary) {
        if (row.total == 0) continue;
        py::dict d;
        d["n"] = row.n;
        d["total"] = row.total;
        d["ppt"] = row.ppt;
        d["npt"] = row.npt;
        d["bound"] = row.bound;
        d["separable"] = row.separable;
        d["undetermined"] = row.undetermined;
        rows.append(d);
      }
      return rows;
    },
    py::arg("n_lo") = 1, py::arg("n_hi") = 16, py::arg("jobs") = 0);
}
