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

#include "bures/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bures/errors.hpp"

namespace bures {

namespace {

constexpr std::size_t kMinSamples = 10000;
constexpr std::size_t kMaxBins = 10000;

// Linear-interpolated quantile of sorted data.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double trapezoid(const std::vector<double>& ys, double h) {
  if (ys.size() < 2) return 0.0;
  double acc = 0.5 * (ys.front() + ys.back());
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) acc += ys[i];
  return acc * h;
}

}  // namespace

std::vector<double> standardize(const std::vector<double>& samples, const EnsembleDims& dims) {
  if (dims.m == 1) throw DegenerateError("standardization undefined at m = 1: zero variance");
  const CumulantSet c = cumulants(dims);
  const double sd = std::sqrt(c.kappa2_f);
  std::vector<double> out;
  out.reserve(samples.size());
  for (double s : samples) out.push_back((s - c.kappa1_f) / sd);
  return out;
}

double gaussian_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double edgeworth_pdf(double x, double skew) { return gaussian_pdf(x) * (1.0 + skew / 6.0 * (x * x * x - 3.0 * x)); }

double edgeworth_pdf(double x, const EnsembleDims& dims) { return edgeworth_pdf(x, skewness(dims)); }

DensityComparison density_comparison(const std::vector<double>& standardized, double skew, const GridSpec& spec) {
  if (standardized.size() < kMinSamples)
    throw std::invalid_argument("density comparison needs at least 10000 samples");
  std::vector<double> sorted(standardized);
  std::sort(sorted.begin(), sorted.end());
  const double lo = spec.lo.value_or(sorted.front());
  const double hi = spec.hi.value_or(sorted.back());
  if (!(hi > lo)) throw std::invalid_argument("empty histogram range");

  std::size_t bins = spec.bins;
  if (bins == 0) {
    const double iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
    const double h = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
    bins = h > 0.0 ? static_cast<std::size_t>(std::ceil((hi - lo) / h)) : 1;
    bins = std::clamp<std::size_t>(bins, 1, kMaxBins);
  }
  const double width = (hi - lo) / static_cast<double>(bins);

  DensityComparison out;
  out.bin_width = width;
  DensityGrid& g = out.grid;
  g.histogram.assign(bins, 0.0);
  std::size_t inside = 0;
  for (double v : sorted) {
    if (v < lo || v > hi) continue;
    std::size_t k = std::min(bins - 1, static_cast<std::size_t>((v - lo) / width));
    g.histogram[k] += 1.0;
    ++inside;
  }
  const double scale = 1.0 / (static_cast<double>(inside) * width);
  for (double& h : g.histogram) h *= scale;

  std::vector<double> dg(bins), de(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    const double x = lo + (static_cast<double>(k) + 0.5) * width;
    g.xs.push_back(x);
    g.gaussian.push_back(gaussian_pdf(x));
    g.edgeworth.push_back(edgeworth_pdf(x, skew));
    dg[k] = std::abs(g.histogram[k] - g.gaussian[k]);
    de[k] = std::abs(g.histogram[k] - g.edgeworth[k]);
  }
  out.l1_gaussian = trapezoid(dg, width);
  out.l1_edgeworth = trapezoid(de, width);
  out.sup_gaussian = *std::max_element(dg.begin(), dg.end());
  out.sup_edgeworth = *std::max_element(de.begin(), de.end());
  return out;
}

DensityComparison density_comparison(const std::vector<double>& samples, const EnsembleDims& dims,
                                     const GridSpec& spec) {
  return density_comparison(standardize(samples, dims), skewness(dims), spec);
}

void write_grid_csv(const DensityGrid& grid, std::ostream& out) {
  out << "x,gaussian,edgeworth,histogram\n";
  char buf[32];
  auto put = [&](double v) {
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
  };
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    put(grid.xs[i]);
    out << ',';
    put(grid.gaussian[i]);
    out << ',';
    put(grid.edgeworth[i]);
    out << ',';
    if (i < grid.histogram.size()) put(grid.histogram[i]);
    out << '\n';
  }
}

}  // namespace bures
