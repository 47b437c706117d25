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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "lattice16/ppt.hpp"
#include "test_helpers.hpp"

using namespace lattice16;
namespace tst = lattice16::testing;

TEST_CASE("q counts") {
  const WeightVector rank6 = WeightVector::uniform_on(tst::bound6_example());
  const QCounts at33 = q_counts(rank6, Site{PauliIndex(3), PauliIndex(3)});
  CHECK(at33.q1 == doctest::Approx(2.0 / 6.0));  // (3,1) and (3,2)
  CHECK(at33.q2 == doctest::Approx(1.0 / 6.0));  // (2,3)

  std::array<double, 16> single{};
  single[Site{PauliIndex(1), PauliIndex(2)}.index()] = 1.0;
  const QCounts own = q_counts(WeightVector::validated(single),
                               Site{PauliIndex(1), PauliIndex(2)});
  CHECK(own.q1 == 0.0);
  CHECK(own.q2 == 0.0);

  std::array<double, 16> uniform{};
  uniform.fill(1.0 / 16.0);
  for (int s = 0; s < 16; ++s) {
    const QCounts q =
        q_counts(WeightVector::validated(uniform), Site::from_index(s));
    CHECK(q.q1 == doctest::Approx(3.0 / 16.0));
    CHECK(q.q2 == doctest::Approx(3.0 / 16.0));
  }
}

TEST_CASE("combinatorial criterion on worked grids") {
  CHECK(ppt_combinatorial(tst::ppt4_diagonal()));
  CHECK(ppt_combinatorial(tst::ppt4_block()));
  CHECK(ppt_combinatorial(tst::ppt6_left()));
  CHECK(ppt_combinatorial(tst::ppt6_right()));
  CHECK(ppt_combinatorial(tst::ppt8_left()));
  CHECK(ppt_combinatorial(tst::ppt8_right()));
  CHECK(ppt_combinatorial(tst::ppt10_left()));
  CHECK(ppt_combinatorial(tst::ppt10_right()));
  CHECK_FALSE(ppt_combinatorial(tst::npt4_example()));
  CHECK_FALSE(ppt_combinatorial(tst::npt5_example()));
  CHECK_FALSE(ppt_combinatorial(tst::npt6_example()));
  CHECK_FALSE(ppt_combinatorial(tst::npt7_example()));
  CHECK_THROWS_AS(ppt_combinatorial(LatticeSubset{}), std::invalid_argument);

  // A column plus a row never hold more than six off-corner sites, so
  // every subset of twelve or more members passes.
  for (std::uint32_t mask = 1; mask < 65536; ++mask)
    if (std::popcount(mask) >= 12)
      CHECK(ppt_combinatorial(LatticeSubset{static_cast<std::uint16_t>(mask)}));
}

TEST_CASE("closed-form spectrum on known weights") {
  std::array<double, 16> concentrated{};
  concentrated[0] = 1.0;
  const auto spectrum =
      pt_spectrum_closed_form(WeightVector::validated(concentrated));
  int negatives = 0;
  for (int s = 0; s < 16; ++s) {
    const Site site = Site::from_index(s);
    CHECK(spectrum[s] ==
          doctest::Approx(0.25 * xi(0, site.col) * xi(0, site.row)));
    if (spectrum[s] < 0.0) ++negatives;
  }
  CHECK(negatives == 6);

  const auto boundary =
      pt_spectrum_closed_form(WeightVector::uniform_on(tst::bound6_example()));
  CHECK(*std::min_element(boundary.begin(), boundary.end()) ==
        doctest::Approx(0.0).epsilon(1e-14));

  std::array<double, 16> uniform{};
  uniform.fill(1.0 / 16.0);
  for (const double v :
       pt_spectrum_closed_form(WeightVector::validated(uniform)))
    CHECK(v == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("spectral route on known states") {
  CHECK_FALSE(ppt_spectral(lattice_state(tst::subset({{0, 0}}))));
  CHECK(pt_min_eigenvalue(lattice_state(tst::subset({{0, 0}}))) ==
        doctest::Approx(-0.25));
  CHECK(ppt_spectral(lattice_state(tst::ppt4_diagonal())));
}

TEST_CASE("closed form agrees with diagonalization on random weights") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<double, 16> w{};
    double sum = 0.0;
    for (double& x : w) sum += (x = unif(rng));
    for (double& x : w) x /= sum;
    w[15] += 1.0 - std::accumulate(w.begin(), w.end(), 0.0);
    const WeightVector pi = WeightVector::validated(w);
    const auto closed = pt_spectrum_closed_form(pi);
    CHECK(std::abs(std::accumulate(closed.begin(), closed.end(), 0.0) - 1.0) <=
          1e-12);
    const ComplexMatrix pt = partial_transpose(weighted_state(pi).matrix, 4, 4,
                                               Subsystem::First);
    CHECK(tst::multiset_distance(
              tst::to_vector(hermitian_eigen(pt).eigenvalues),
              tst::to_vector(closed)) <= 1e-10);
  }
}

TEST_CASE("combinatorial and spectral routes agree on a random sample") {
  // The exhaustive sweep lives in the acceptance suite; spot-check here.
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const LatticeSubset i = tst::random_subset(rng);
    CHECK(ppt_combinatorial(i) == ppt_spectral(lattice_state(i)));
  }
}
