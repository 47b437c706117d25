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

#include "lattice16/states.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lattice16 {

namespace {
// Cell glyphs; the cross is the two-byte multiplication sign.
constexpr const char* kCross = "\xc3\x97";
constexpr const char* kEmpty = ".";
}  // namespace

LatticeSubset LatticeSubset::from_sites(std::initializer_list<Site> sites) {
  LatticeSubset out;
  for (const Site& s : sites) out.mask |= 1u << s.index();
  return out;
}

LatticeSubset LatticeSubset::from_sites(const std::vector<Site>& sites) {
  LatticeSubset out;
  for (const Site& s : sites) out.mask |= 1u << s.index();
  return out;
}

int LatticeSubset::size() const { return std::popcount(mask); }

std::vector<Site> LatticeSubset::sites() const {
  std::vector<Site> out;
  out.reserve(size());
  for (int s = 0; s < 16; ++s)
    if ((mask >> s) & 1u) out.push_back(Site::from_index(s));
  return out;
}

WeightVector WeightVector::validated(const std::array<double, 16>& w) {
  double sum = 0.0;
  for (double x : w) {
    if (x < 0.0) throw std::invalid_argument("WeightVector: negative weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WeightVector: weights must sum to one");
  return WeightVector{w};
}

WeightVector WeightVector::uniform_on(LatticeSubset i) {
  if (i.empty())
    throw std::invalid_argument("WeightVector: empty lattice subset");
  WeightVector out;
  const double w = 1.0 / i.size();
  for (int s = 0; s < 16; ++s)
    if ((i.mask >> s) & 1u) out.weights[s] = w;
  return out;
}

LatticeState weighted_state(const WeightVector& pi) {
  ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
  for (int s = 0; s < 16; ++s)
    if (pi.weights[s] != 0.0)
      rho += pi.weights[s] * basis_projector(Site::from_index(s));
  return LatticeState{pi, std::move(rho)};
}

LatticeState lattice_state(LatticeSubset i) {
  return weighted_state(WeightVector::uniform_on(i));
}

std::string render_grid(LatticeSubset i) {
  std::ostringstream out;
  for (int row = 3; row >= 0; --row) {
    out << row;
    for (int col = 0; col <= 3; ++col)
      out << ' '
          << (i.contains(Site{PauliIndex(col), PauliIndex(row)}) ? kCross
                                                                 : kEmpty);
    out << '\n';
  }
  out << "  0 1 2 3\n";
  return out.str();
}

LatticeSubset parse_grid(std::string_view text) {
  LatticeSubset out;
  int rows_seen = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    // Row lines start with their label in the first column; the indented
    // column footer does not.
    if (line.empty() || line[0] < '0' || line[0] > '3') continue;
    const int row = line[0] - '0';
    std::istringstream cells(line.substr(1));
    for (int col = 0; col <= 3; ++col) {
      std::string cell;
      if (!(cells >> cell))
        throw std::invalid_argument("parse_grid: short row");
      if (cell == "x" || cell == "X" || cell == kCross)
        out.mask |= 1u << Site{PauliIndex(col), PauliIndex(row)}.index();
      else if (cell != kEmpty && cell != "\xc2\xb7")
        throw std::invalid_argument("parse_grid: unknown cell '" + cell + "'");
    }
    ++rows_seen;
  }
  if (rows_seen != 4) throw std::invalid_argument("parse_grid: need 4 rows");
  return out;
}

std::string subset_to_json(LatticeSubset i) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Site& s : i.sites())
    arr.push_back({s.col.value, s.row.value});
  return arr.dump();
}

LatticeSubset subset_from_json(std::string_view text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("subset_from_json: array");
  LatticeSubset out;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("subset_from_json: need [col,row] pairs");
    out.mask |= 1u
                << Site{PauliIndex(pair[0].get<int>()),
                        PauliIndex(pair[1].get<int>())}
                       .index();
  }
  return out;
}

}  // namespace lattice16
