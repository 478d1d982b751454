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

// Acceptance runner: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include "bures/cumulants.hpp"
#include "bures/distribution.hpp"
#include "bures/identities.hpp"
#include "bures/quadrature.hpp"
#include "bures/sampler.hpp"

namespace {

using bures::EnsembleDims;

constexpr std::uint64_t kSeed = 20240601;
constexpr double kSigmas = 4.0;
constexpr double kKsLevel = 0.01;

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Runner {
 public:
  void run(int id, double budget_s, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
      v.pass = false;
      v.detail += "; over the " + fmt(budget_s) + " s budget";
    }
    all_ = all_ && v.pass;
    std::printf("criterion %2d: %s  %s  [%.2f s]\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  bool all() const { return all_; }
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
  }

 private:
  bool all_ = true;
};

std::string dims_tag(const EnsembleDims& d) { return "(" + std::to_string(d.m) + "," + std::to_string(d.n) + ")"; }

// Cached MCMC batches keyed by (m, n, samples).
const bures::SampleBatch& batch(int m, int n, std::size_t samples) {
  static std::map<std::tuple<int, int, std::size_t>, bures::SampleBatch> cache;
  const auto key = std::make_tuple(m, n, samples);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const EnsembleDims dims(m, n);
    const std::uint64_t seed = bures::chain_seed(kSeed, static_cast<std::uint64_t>(m * 1000 + n));
    it = cache.emplace(key, bures::mcmc_chain(dims, bures::recommended_chain_config(dims, samples, seed))).first;
  }
  return it->second;
}

Verdict criterion1() {
  for (int n = 1; n <= 50; ++n) {
    const EnsembleDims d(1, n);
    if (!bures::kappa1(d).is_zero() || !bures::kappa2(d).is_zero() || !bures::kappa3(d).is_zero())
      return {false, "nonzero cumulant at n=" + std::to_string(n)};
  }
  return {true, "kappa1..3 are the zero polynomial for m=1, n=1..50"};
}

Verdict criterion2() {
  Verdict v;
  double worst2 = 0, worst3 = 0;
  auto check = [&](int m, int n, double tol, double& worst) {
    const EnsembleDims d(m, n);
    const auto oracle = bures::oracle_cumulants(d);
    const auto c = bures::cumulants(d);
    const double f[3] = {c.kappa1_f, c.kappa2_f, c.kappa3_f};
    for (int k = 0; k < 3; ++k) {
      const double diff = std::abs(oracle[k].value - f[k]);
      worst = std::max(worst, diff);
      if (diff > tol) {
        v.pass = false;
        v.detail += "kappa" + std::to_string(k + 1) + dims_tag(d) + " off by " + Runner::fmt(diff) + "; ";
      }
    }
  };
  for (int n : {2, 3, 5, 10}) check(2, n, 1e-8, worst2);
  for (int n : {3, 4, 6}) check(3, n, 1e-6, worst3);
  const auto k322 = bures::kappa3(EnsembleDims(2, 2));
  if (k322.to_string() != "75/8*z3 - 33/160*z2 - 295/27" || std::abs(bures::poly_eval_double(k322) - 0.004090) > 5e-7) {
    v.pass = false;
    v.detail += "kappa3(2,2) closed form mismatch; ";
  }
  v.detail += "max |oracle-formula| m=2: " + Runner::fmt(worst2) + " (tol 1e-8), m=3: " + Runner::fmt(worst3) +
              " (tol 1e-6)";
  return v;
}

Verdict criterion3() {
  Verdict v;
  double worst2 = 0, worst3 = 0;
  for (int n : {2, 3, 5, 10}) worst2 = std::max(worst2, std::abs(bures::normalization_check(EnsembleDims(2, n)).value - 1));
  for (int n : {3, 4, 6}) worst3 = std::max(worst3, std::abs(bures::normalization_check(EnsembleDims(3, n)).value - 1));
  v.pass = worst2 <= 1e-10 && worst3 <= 1e-7;
  v.detail = "max |Z-1| m=2: " + Runner::fmt(worst2) + " (tol 1e-10), m=3: " + Runner::fmt(worst3) + " (tol 1e-7)";
  return v;
}

Verdict criterion4() {
  const auto grid = bures::identity_grid(8);
  const auto rep = bures::run_identity_cases(grid);
  Verdict v;
  v.pass = rep.all_pass() && rep.passed >= 500;
  v.detail = std::to_string(rep.passed) + " zero residuals, " + std::to_string(rep.failed) + " nonzero, " +
             std::to_string(rep.errors) + " errors, " + std::to_string(rep.skipped) + " boundary cases skipped";
  for (const auto& o : rep.outcomes)
    if (o.status == bures::CaseStatus::Fail || o.status == bures::CaseStatus::Error) {
      v.detail += "; first failure " + o.identity.identity_id + ": " + o.residual_text;
      break;
    }
  return v;
}

Verdict criterion5() {
  std::size_t relations = 0;
  for (int m = 1; m <= 20; ++m)
    for (const auto& r : bures::degenerate_anomaly_check(m)) {
      ++relations;
      if (!r.holds) return {false, r.relation + " fails at m=" + std::to_string(m) + ": " + r.residual_text};
    }
  return {true, std::to_string(relations) + " exact relations hold for m=1..20"};
}

Verdict criterion6() {
  constexpr std::size_t kN = 50000;
  Verdict v;
  for (auto [m, n] : {std::pair{2, 2}, {3, 4}, {4, 6}}) {
    const EnsembleDims d(m, n);
    const auto& b = batch(m, n, kN);
    const double shape = d.d.to_double();
    const double p = bures::ks_one_sample(b.thetas, [&](double x) { return bures::gamma_cdf(shape, x); }).p_value;
    const double corr = bures::pearson_correlation(b.thetas, b.entropies);
    const double bound = 4.0 / std::sqrt(static_cast<double>(kN));
    const bool ok = p > kKsLevel && std::abs(corr) < bound;
    v.pass = v.pass && ok;
    v.detail += dims_tag(d) + " KS p=" + Runner::fmt(p) + " corr=" + Runner::fmt(corr) + "; ";
  }
  v.detail += "bound |corr| < " + Runner::fmt(4.0 / std::sqrt(50000.0));
  return v;
}

Verdict criterion7() {
  constexpr std::size_t kN = 100000;
  Verdict v;
  for (auto [m, n] : {std::pair{3, 3}, {4, 8}, {5, 15}}) {
    const EnsembleDims d(m, n);
    const auto k = bures::k_statistics(batch(m, n, kN).entropies);
    const auto c = bures::cumulants(d);
    const double z[3] = {(k.k1 - c.kappa1_f) / k.se1, (k.k2 - c.kappa2_f) / k.se2, (k.k3 - c.kappa3_f) / k.se3};
    for (double zi : z) v.pass = v.pass && std::abs(zi) < kSigmas;
    v.detail += dims_tag(d) + " z=(" + Runner::fmt(z[0]) + "," + Runner::fmt(z[1]) + "," + Runner::fmt(z[2]) + ") ";
  }
  return v;
}

Verdict criterion8() {
  namespace bm = boost::math;
  // Moment-derivative oracle at m = n = 1: x ~ Gamma(1/2), E[(x ln x)^k] from derivatives of Gamma(1/2+s).
  const double dd = 0.5;
  double mom[3];
  for (int k = 1; k <= 3; ++k) {
    const double a = dd + k, r = bm::tgamma_ratio(a, dd);
    const double p0 = bm::digamma(a), p1 = bm::trigamma(a), p2 = bm::polygamma(2, a);
    const double der[3] = {p0, p0 * p0 + p1, p0 * p0 * p0 + 3 * p0 * p1 + p2};
    mom[k - 1] = r * der[k - 1];
  }
  const double oracle = mom[2] - 3 * mom[1] * mom[0] + 2 * mom[0] * mom[0] * mom[0];
  const double formula = bures::poly_eval_double(bures::kappa3_unconstrained(EnsembleDims(1, 1)));
  Verdict v;
  v.pass = std::abs(formula - oracle) <= 1e-9;
  v.detail = "kappa3T(1,1)=" + Runner::fmt(formula) + " |diff|=" + Runner::fmt(std::abs(formula - oracle)) + "; ";
  for (auto [m, n] : {std::pair{2, 2}, {3, 4}}) {
    const EnsembleDims d(m, n);
    const auto k = bures::k_statistics(batch(m, n, 50000).t_values);
    const double z = (k.k3 - bures::poly_eval_double(bures::kappa3_unconstrained(d))) / k.se3;
    v.pass = v.pass && std::abs(z) < kSigmas;
    v.detail += dims_tag(d) + " z=" + Runner::fmt(z) + " ";
  }
  return v;
}

Verdict criterion9() {
  Verdict v;
  const EnsembleDims d11(1, 1);
  v.pass = bures::third_moment_conversion(bures::unconstrained_moments(d11)[2], d11).is_zero();
  v.detail = std::string("m=1 collapse ") + (v.pass ? "exact" : "NOT exact") + "; ";
  for (auto [m, n, N] : {std::tuple{2, 2, std::size_t{50000}}, {4, 6, std::size_t{200000}}}) {
    const EnsembleDims d(m, n);
    std::vector<double> t3;
    for (double t : batch(m, n, N).t_values) t3.push_back(t * t * t);
    const auto k = bures::k_statistics(t3);
    const double est = bures::third_moment_conversion(k.k1, d);
    const double se = std::abs(bures::third_moment_conversion(k.k1 + k.se1, d) - est);
    const double z = (est - bures::poly_eval_double(bures::constrained_moments(d)[2])) / se;
    v.pass = v.pass && std::abs(z) < kSigmas;
    v.detail += dims_tag(d) + " z=" + Runner::fmt(z) + " ";
  }
  return v;
}

Verdict criterion10() {
  const EnsembleDims d(4, 6);
  const auto dc = bures::density_comparison(batch(4, 6, 200000).entropies, d);
  return {dc.l1_edgeworth < dc.l1_gaussian,
          "L1 edgeworth=" + Runner::fmt(dc.l1_edgeworth) + " gaussian=" + Runner::fmt(dc.l1_gaussian)};
}

Verdict criterion11() {
  const double s16 = bures::skewness(EnsembleDims(8, 16)), s32 = bures::skewness(EnsembleDims(16, 32)),
               s64 = bures::skewness(EnsembleDims(32, 64));
  const double r1 = s16 / s32, r2 = s32 / s64;
  auto ok = [](double r) { return r >= 2.0 * 0.85 && r <= 2.0 * 1.15; };
  return {ok(r1) && ok(r2), "ratios " + Runner::fmt(r1) + ", " + Runner::fmt(r2) + " (target 2 +/- 15%)"};
}

Verdict criterion12() {
  using boost::math::quadrature::gauss_kronrod;
  Verdict v;
  double worst0 = 0, worst12 = 0;
  for (auto [m, n] : {std::pair{2, 2}, {3, 4}, {4, 6}, {8, 16}}) {
    const double skew = bures::skewness(EnsembleDims(m, n));
    auto moment = [&](int k) {
      return gauss_kronrod<double, 61>::integrate(
          [&](double x) { return std::pow(x, k) * bures::edgeworth_pdf(x, skew); }, -10.0, 10.0, 15, 1e-14);
    };
    worst0 = std::max(worst0, std::abs(moment(0) - 1.0));
    worst12 = std::max({worst12, std::abs(moment(1)), std::abs(moment(2) - 1.0)});
  }
  v.pass = worst0 <= 1e-8 && worst12 <= 1e-6;
  v.detail = "max |mass-1|=" + Runner::fmt(worst0) + " (tol 1e-8), max moment error=" + Runner::fmt(worst12) +
             " (tol 1e-6)";
  return v;
}

}  // namespace

int main() {
  Runner r;
  r.run(1, 1.0, criterion1);
  r.run(2, 60.0, criterion2);
  r.run(3, 30.0, criterion3);
  r.run(4, 120.0, criterion4);
  r.run(5, 0.0, criterion5);
  r.run(6, 300.0, criterion6);
  r.run(7, 600.0, criterion7);
  r.run(8, 0.0, criterion8);
  r.run(9, 0.0, criterion9);
  r.run(10, 0.0, criterion10);
  r.run(11, 0.0, criterion11);
  r.run(12, 0.0, criterion12);
  std::printf("acceptance: %s\n", r.all() ? "ALL PASS" : "FAILURES");
  return r.all() ? 0 : 1;
}
