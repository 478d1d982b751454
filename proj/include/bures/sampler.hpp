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


#ifndef BURES_SAMPLER_HPP
#define BURES_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bures/cumulants.hpp"

namespace bures {

// Eigenvalues of the unconstrained ensemble; theta = sum x.
struct UnconstrainedSpectrum {
  std::vector<double> x;
  double theta = 0.0;
};

// theta is recomputed from x.
UnconstrainedSpectrum make_unconstrained(std::vector<double> x);

// Unit-trace spectrum, lambda_i >= 0.
struct Spectrum {
  std::vector<double> lambda;
};

struct ChainConfig {
  std::size_t burn_in = 4000;
  std::size_t thinning = 10;
  // 0 selects 0.25/sqrt(m).
  double step_scale = 0.0;
  unsigned chain_count = 1;
  std::uint64_t seed = 0;
  // Total retained samples over all chains.
  std::size_t samples = 10000;
};

// Thinning 10 m^2 and burn-in 5000 + 1000 m^2: thinned draws are close to
// independent for every m the sampler has been profiled on (m <= 6).
ChainConfig recommended_chain_config(const EnsembleDims& dims, std::size_t samples, std::uint64_t seed);

enum class Backend { Mcmc, MatrixModel };
std::string backend_name(Backend b);

struct SampleBatch {
  std::vector<Spectrum> spectra;
  // MCMC: trace of the unconstrained draw. Matrix model: trace of the
  // unnormalized matrix.
  std::vector<double> thetas;
  std::vector<double> entropies;
  // T = sum x ln x of the unconstrained draw (MCMC only, empty otherwise).
  std::vector<double> t_values;
  std::vector<unsigned> chain;
  std::vector<std::size_t> step;
  int m = 1, n = 1;
  ChainConfig config;
  Backend backend = Backend::Mcmc;
  double acceptance_rate = 0.0;
  std::vector<double> tuned_step;  // per chain
};

// Unnormalized log density of the unconstrained eigenvalues.
// DomainError if some x_i <= 0, DegenerateError if two coordinates coincide.
double log_density_unconstrained(const std::vector<double>& x, const EnsembleDims& dims);

// Random-walk Metropolis on ln x with Gaussian increments, step auto-tuned
// during burn-in and then frozen. Deterministic in (dims, config).
SampleBatch mcmc_chain(const EnsembleDims& dims, const ChainConfig& config);

// lambda = x / theta.
Spectrum project_to_simplex(const UnconstrainedSpectrum& u);

// One draw of eigenvalues of M / tr M, M = (I+U) Z Z* (I+U)*, Z complex
// Ginibre m x m, U Haar; sorted descending. The generator is advanced.
Spectrum sample_matrix_model(int m, std::mt19937_64& rng, double* trace_out = nullptr);

// `samples` matrix-model draws for n = m, deterministic in seed.
SampleBatch matrix_model_batch(int m, std::size_t samples, std::uint64_t seed);

// -sum lambda ln lambda with 0 ln 0 = 0.
double entropy(const Spectrum& s);
// sum x ln x.
double entropy_T(const UnconstrainedSpectrum& u);

struct KStatistics {
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  // Batch-means standard errors; NaN with fewer than 3 values per batch.
  double se1 = 0.0, se2 = 0.0, se3 = 0.0;
  std::size_t count = 0;
};

// Unbiased k-statistics. Throws std::invalid_argument for fewer than 3 values.
KStatistics k_statistics(const std::vector<double>& values, std::size_t batches = 50);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// One-sample Kolmogorov-Smirnov against a continuous CDF.
KsResult ks_one_sample(std::vector<double> values, const std::function<double(double)>& cdf);
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);
// Regularized lower incomplete gamma P(shape, x).
double gamma_cdf(double shape, double x);

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

// Header chain,step,theta,S,lambda_1..lambda_m; shortest round-trip decimals.
void write_samples_csv(const SampleBatch& batch, std::ostream& out);

// Seed of chain `index` derived from the base seed.
std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace bures

#endif  // BURES_SAMPLER_HPP
