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


#ifndef BURES_DISTRIBUTION_HPP
#define BURES_DISTRIBUTION_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "bures/cumulants.hpp"

namespace bures {

// X = (S - kappa1) / sqrt(kappa2). DegenerateError at m = 1.
std::vector<double> standardize(const std::vector<double>& samples, const EnsembleDims& dims);

double gaussian_pdf(double x);
// phi(x) (1 + skew/6 (x^3 - 3x)); negative tail values are returned as is.
double edgeworth_pdf(double x, double skew);
double edgeworth_pdf(double x, const EnsembleDims& dims);

struct GridSpec {
  // 0 selects the Freedman-Diaconis bin count.
  std::size_t bins = 0;
  std::optional<double> lo, hi;
};

struct DensityGrid {
  std::vector<double> xs;  // bin centers
  std::vector<double> gaussian;
  std::vector<double> edgeworth;
  std::vector<double> histogram;  // unit mass over [lo, hi]
};

struct DensityComparison {
  DensityGrid grid;
  double bin_width = 0.0;
  double l1_gaussian = 0.0, l1_edgeworth = 0.0;
  double sup_gaussian = 0.0, sup_edgeworth = 0.0;
};

// Histogram of already standardized samples against both densities. L1
// distances use the trapezoid rule on the bin centers. At least 1e4 samples.
DensityComparison density_comparison(const std::vector<double>& standardized, double skew,
                                     const GridSpec& spec = {});
// Standardizes raw entropy samples with the exact cumulants of dims first.
DensityComparison density_comparison(const std::vector<double>& samples, const EnsembleDims& dims,
                                     const GridSpec& spec = {});

// Header x,gaussian,edgeworth,histogram.
void write_grid_csv(const DensityGrid& grid, std::ostream& out);

}  // namespace bures

#endif  // BURES_DISTRIBUTION_HPP
