/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing,
 * software distributed under the License is distributed on an
 * "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
 * KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations
 * under the License.
 */

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "bures/cumulants.hpp"
#include "bures/distribution.hpp"
#include "bures/errors.hpp"
#include "bures/sampler.hpp"

using bures::EnsembleDims;

TEST_CASE("standardization") {
  const EnsembleDims dims(3, 4);
  const auto c = bures::cumulants(dims);
  const double sd = std::sqrt(c.kappa2_f);
  const auto z = bures::standardize({c.kappa1_f, c.kappa1_f + sd, c.kappa1_f - sd}, dims);
  CHECK(std::abs(z[0]) < 1e-12);
  CHECK(std::abs(z[1] - 1.0) < 1e-12);
  CHECK(std::abs(z[2] + 1.0) < 1e-12);
  CHECK_THROWS_AS(bures::standardize({0.0}, EnsembleDims(1, 4)), bures::DegenerateError);
}

TEST_CASE("Gaussian and Edgeworth densities") {
  CHECK(std::abs(bures::gaussian_pdf(0.0) - 0.3989423) < 5e-8);
  CHECK(std::abs(bures::gaussian_pdf(1.0) - 0.2419707) < 5e-8);
  CHECK(bures::gaussian_pdf(-1.0) == bures::gaussian_pdf(1.0));
  CHECK(std::abs(bures::gaussian_pdf(3.0) - 0.0044318) < 5e-8);
  for (auto dims : {EnsembleDims(2, 2), EnsembleDims(4, 6), EnsembleDims(7, 30)}) {
    CHECK(std::abs(bures::edgeworth_pdf(0.0, dims) - 0.3989423) < 5e-8);
    CHECK(std::abs(bures::edgeworth_pdf(std::sqrt(3.0), dims) - bures::gaussian_pdf(std::sqrt(3.0))) < 1e-15);
  }
  const double expected = bures::gaussian_pdf(1.0) * (1.0 + bures::skewness(EnsembleDims(2, 2)) / 6.0 * (-2.0));
  CHECK(std::abs(bures::edgeworth_pdf(1.0, EnsembleDims(2, 2)) - expected) < 1e-15);
  CHECK(std::abs(bures::edgeworth_pdf(1.0, EnsembleDims(2, 2)) - 0.18965) < 5e-6);
  CHECK(bures::edgeworth_pdf(2.0, 0.0) == bures::gaussian_pdf(2.0));
}

TEST_CASE("density comparison on synthetic Gaussian data") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> nd;
  std::vector<double> z(200000);
  for (auto& v : z) v = nd(rng);
  const auto dc = bures::density_comparison(z, 0.0, {});
  CHECK(dc.l1_gaussian < 0.05);
  CHECK(dc.l1_edgeworth == dc.l1_gaussian);
  CHECK(dc.grid.xs.size() > 10);
  double mass = 0.0;
  for (double h : dc.grid.histogram) mass += h * dc.bin_width;
  CHECK(std::abs(mass - 1.0) < 1e-12);

  bures::GridSpec spec;
  spec.bins = 40;
  spec.lo = -4.0;
  spec.hi = 4.0;
  const auto fixed = bures::density_comparison(z, 0.0, spec);
  CHECK(fixed.grid.xs.size() == 40);
  CHECK(std::abs(fixed.bin_width - 0.2) < 1e-15);
  CHECK_THROWS_AS(bures::density_comparison(std::vector<double>(100, 0.0), 0.0, {}), std::invalid_argument);

  std::ostringstream csv;
  bures::write_grid_csv(fixed.grid, csv);
  CHECK(csv.str().rfind("x,gaussian,edgeworth,histogram\n", 0) == 0);
}

TEST_CASE("Edgeworth is competitive at m = n = 2") {
  const EnsembleDims dims(2, 2);
  const auto batch = bures::mcmc_chain(dims, bures::recommended_chain_config(dims, 200000, 4242));
  const auto dc = bures::density_comparison(batch.entropies, dims);
  CHECK(std::isfinite(dc.l1_gaussian));
  CHECK(std::isfinite(dc.l1_edgeworth));
  CHECK(dc.l1_edgeworth <= 1.1 * dc.l1_gaussian);
  const auto z = bures::standardize(batch.entropies, dims);
  const auto k = bures::k_statistics(z);
  CHECK(std::abs(k.k1) < 4 * k.se1);
}
