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

#include "bures/sampler.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

#include "bures/errors.hpp"

namespace bures {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kTuneInterval = 100;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Log target in y = ln x, including the Jacobian sum y.
double log_target_y(const std::vector<double>& x, const std::vector<double>& y, double alpha) {
  const std::size_t m = x.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    acc += (alpha + 1.0) * y[i] - x[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const double diff = x[i] - x[j];
      if (diff == 0.0) return kNegInf;
      acc += std::log(diff * diff / (x[i] + x[j]));
    }
  }
  return acc;
}

struct ChainOutput {
  std::vector<UnconstrainedSpectrum> draws;
  std::vector<std::size_t> steps;
  std::size_t accepted = 0, proposed = 0;
  double step = 0.0;
};

ChainOutput run_chain(const EnsembleDims& dims, const ChainConfig& cfg, std::size_t samples, std::uint64_t seed) {
  const std::size_t m = static_cast<std::size_t>(dims.m);
  const double alpha = dims.alpha.to_double();
  const double d = dims.d.to_double();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  const double step0 = cfg.step_scale > 0.0 ? cfg.step_scale : 0.25 / std::sqrt(static_cast<double>(m));
  double step = step0;

  // Distinct starting coordinates summing to the mean trace d.
  std::vector<double> x(m), y(m), xp(m), yp(m);
  const double weight_sum = 0.5 * static_cast<double>(m * (m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = d * static_cast<double>(i + 1) / weight_sum;
    y[i] = std::log(x[i]);
  }
  double logp = log_target_y(x, y, alpha);

  ChainOutput out;
  out.draws.reserve(samples);
  out.steps.reserve(samples);
  std::size_t window_acc = 0, window_n = 0;
  const std::size_t total = cfg.burn_in + samples * cfg.thinning;
  for (std::size_t t = 0; t < total; ++t) {
    for (std::size_t i = 0; i < m; ++i) {
      yp[i] = y[i] + step * normal(rng);
      xp[i] = std::exp(yp[i]);
    }
    const double logp_new = log_target_y(xp, yp, alpha);
    const bool accept = logp_new >= logp || std::log(uniform(rng)) < logp_new - logp;
    if (accept) {
      std::swap(x, xp);
      std::swap(y, yp);
      logp = logp_new;
    }
    if (t < cfg.burn_in) {
      window_acc += accept;
      if (++window_n == kTuneInterval) {
        const double rate = static_cast<double>(window_acc) / static_cast<double>(window_n);
        if (rate < 0.2) step *= 0.8;
        if (rate > 0.5) step *= 1.25;
        step = std::clamp(step, step0 / 100.0, step0 * 100.0);
        window_acc = window_n = 0;
      }
      continue;
    }
    ++out.proposed;
    out.accepted += accept;
    if ((t - cfg.burn_in + 1) % cfg.thinning == 0) {
      out.draws.push_back(make_unconstrained(x));
      out.steps.push_back(t - cfg.burn_in + 1);
    }
  }
  out.step = step;
  return out;
}

void validate(const ChainConfig& cfg) {
  if (cfg.thinning < 1) throw std::invalid_argument("thinning must be >= 1");
  if (cfg.chain_count < 1) throw std::invalid_argument("chain_count must be >= 1");
  if (cfg.step_scale < 0.0 || !std::isfinite(cfg.step_scale)) throw std::invalid_argument("step_scale must be positive");
}

}  // namespace

ChainConfig recommended_chain_config(const EnsembleDims& dims, std::size_t samples, std::uint64_t seed) {
  ChainConfig c;
  const std::size_t m2 = static_cast<std::size_t>(dims.m) * static_cast<std::size_t>(dims.m);
  c.thinning = 10 * m2;
  c.burn_in = 5000 + 1000 * m2;
  c.samples = samples;
  c.seed = seed;
  return c;
}

std::string backend_name(Backend b) { return b == Backend::Mcmc ? "mcmc" : "matrix"; }

UnconstrainedSpectrum make_unconstrained(std::vector<double> x) {
  UnconstrainedSpectrum u;
  u.theta = std::accumulate(x.begin(), x.end(), 0.0);
  u.x = std::move(x);
  return u;
}

double log_density_unconstrained(const std::vector<double>& x, const EnsembleDims& dims) {
  if (x.size() != static_cast<std::size_t>(dims.m)) throw std::invalid_argument("spectrum length must equal m");
  const double alpha = dims.alpha.to_double();
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) throw DomainError("unconstrained eigenvalues must be positive");
    acc += alpha * std::log(x[i]) - x[i];
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) throw DegenerateError("coincident eigenvalues");
      const double diff = x[i] - x[j];
      acc += std::log(diff * diff / (x[i] + x[j]));
    }
  return acc;
}

std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed + golden-ratio stride.
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Spectrum project_to_simplex(const UnconstrainedSpectrum& u) {
  if (!(u.theta > 0.0)) throw DomainError("trace must be positive");
  Spectrum s;
  s.lambda.reserve(u.x.size());
  for (double v : u.x) s.lambda.push_back(v / u.theta);
  return s;
}

double entropy(const Spectrum& s) {
  double acc = 0.0;
  for (double l : s.lambda) acc -= xlogx(l);
  return acc;
}

double entropy_T(const UnconstrainedSpectrum& u) {
  double acc = 0.0;
  for (double v : u.x) acc += xlogx(v);
  return acc;
}

SampleBatch mcmc_chain(const EnsembleDims& dims, const ChainConfig& config) {
  validate(config);
  const unsigned chains = config.chain_count;
  std::vector<ChainOutput> outputs(chains);
  auto share = [&](unsigned c) { return config.samples / chains + (c < config.samples % chains ? 1 : 0); };
  if (chains == 1) {
    outputs[0] = run_chain(dims, config, share(0), chain_seed(config.seed, 0));
  } else {
    std::vector<std::thread> workers;
    for (unsigned c = 0; c < chains; ++c)
      workers.emplace_back([&, c] { outputs[c] = run_chain(dims, config, share(c), chain_seed(config.seed, c)); });
    for (auto& w : workers) w.join();
  }

  SampleBatch batch;
  batch.m = dims.m;
  batch.n = dims.n;
  batch.config = config;
  batch.backend = Backend::Mcmc;
  std::size_t acc = 0, prop = 0;
  for (unsigned c = 0; c < chains; ++c) {
    auto& o = outputs[c];
    acc += o.accepted;
    prop += o.proposed;
    batch.tuned_step.push_back(o.step);
    for (std::size_t i = 0; i < o.draws.size(); ++i) {
      Spectrum s = project_to_simplex(o.draws[i]);
      batch.entropies.push_back(entropy(s));
      batch.thetas.push_back(o.draws[i].theta);
      batch.t_values.push_back(entropy_T(o.draws[i]));
      batch.spectra.push_back(std::move(s));
      batch.chain.push_back(c);
      batch.step.push_back(o.steps[i]);
    }
  }
  batch.acceptance_rate = prop ? static_cast<double>(acc) / static_cast<double>(prop) : 0.0;
  return batch;
}

Spectrum sample_matrix_model(int m, std::mt19937_64& rng, double* trace_out) {
  if (m < 1) throw DomainError("m must be positive");
  using Mat = Eigen::MatrixXcd;
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  auto ginibre = [&] {
    Mat g(m, m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) g(i, j) = std::complex<double>(normal(rng), normal(rng));
    return g;
  };
  const Mat z = ginibre();
  const Mat g = ginibre();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  // Phase fix makes Q Haar distributed.
  for (int j = 0; j < m; ++j) {
    const std::complex<double> diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= mag > 0.0 ? diag / mag : std::complex<double>(1.0, 0.0);
  }
  const Mat a = (Mat::Identity(m, m) + q) * z;
  const Mat mtx = a * a.adjoint();
  const double trace = mtx.trace().real();
  if (trace_out) *trace_out = trace;
  Eigen::SelfAdjointEigenSolver<Mat> solver(mtx / trace, Eigen::EigenvaluesOnly);
  Spectrum s;
  s.lambda.resize(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    s.lambda[i] = std::max(0.0, solver.eigenvalues()[i]);
    total += s.lambda[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::runtime_error("matrix-model eigenvalues do not sum to one");
  std::sort(s.lambda.begin(), s.lambda.end(), std::greater<>());
  return s;
}

SampleBatch matrix_model_batch(int m, std::size_t samples, std::uint64_t seed) {
  SampleBatch batch;
  batch.m = batch.n = m;
  batch.backend = Backend::MatrixModel;
  batch.config.seed = seed;
  batch.config.samples = samples;
  batch.config.burn_in = 0;
  batch.config.thinning = 1;
  batch.acceptance_rate = 1.0;
  std::mt19937_64 rng(chain_seed(seed, 0));
  for (std::size_t i = 0; i < samples; ++i) {
    double trace = 0.0;
    Spectrum s = sample_matrix_model(m, rng, &trace);
    batch.entropies.push_back(entropy(s));
    batch.thetas.push_back(trace);
    batch.spectra.push_back(std::move(s));
    batch.chain.push_back(0);
    batch.step.push_back(i + 1);
  }
  return batch;
}

namespace {

struct Plain {
  double k1, k2, k3;
};

Plain plain_k(const double* v, std::size_t n) {
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += v[i];
  mean /= static_cast<double>(n);
  double s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = v[i] - mean;
    s2 += dev * dev;
    s3 += dev * dev * dev;
  }
  const double nn = static_cast<double>(n);
  return {mean, s2 / (nn - 1.0), nn * s3 / ((nn - 1.0) * (nn - 2.0))};
}

double standard_error(const std::vector<double>& xs) {
  const std::size_t b = xs.size();
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(b);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(b - 1) / static_cast<double>(b));
}

double kolmogorov_p(double d, double n_eff) {
  const double sq = std::sqrt(n_eff);
  const double lambda = (sq + 0.12 + 0.11 / sq) * d;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

KStatistics k_statistics(const std::vector<double>& values, std::size_t batches) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("k_statistics needs at least 3 values");
  KStatistics k;
  k.count = n;
  const Plain all = plain_k(values.data(), n);
  k.k1 = all.k1;
  k.k2 = all.k2;
  k.k3 = all.k3;
  const std::size_t per = batches ? n / batches : 0;
  if (batches < 2 || per < 3) {
    k.se1 = k.se2 = k.se3 = std::numeric_limits<double>::quiet_NaN();
    return k;
  }
  std::vector<double> b1, b2, b3;
  for (std::size_t i = 0; i < batches; ++i) {
    const Plain p = plain_k(values.data() + i * per, per);
    b1.push_back(p.k1);
    b2.push_back(p.k2);
    b3.push_back(p.k3);
  }
  // Spread of the batch statistics around their mean.
  k.se1 = standard_error(b1);
  k.se2 = standard_error(b2);
  k.se3 = standard_error(b3);
  return k;
}

KsResult ks_one_sample(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("KS test needs values");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, kolmogorov_p(d, n)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("KS test needs values");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return {d, kolmogorov_p(d, na * nb / (na + nb))};
}

double gamma_cdf(double shape, double x) { return x <= 0.0 ? 0.0 : boost::math::gamma_p(shape, x); }

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("correlation needs equal-length inputs");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

namespace {

void put_double(std::ostream& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, res.ptr - buf);
}

}  // namespace

void write_samples_csv(const SampleBatch& batch, std::ostream& out) {
  out << "chain,step,theta,S";
  for (int i = 1; i <= batch.m; ++i) out << ",lambda_" << i;
  out << '\n';
  for (std::size_t r = 0; r < batch.spectra.size(); ++r) {
    out << batch.chain[r] << ',' << batch.step[r] << ',';
    put_double(out, batch.thetas[r]);
    out << ',';
    put_double(out, batch.entropies[r]);
    for (double l : batch.spectra[r].lambda) {
      out << ',';
      put_double(out, l);
    }
    out << '\n';
  }
}

}  // namespace bures
