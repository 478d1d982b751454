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

#include "bures/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bures/errors.hpp"

namespace bures {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr unsigned kMaxDepth = 18;
constexpr double kHalfPi = std::numbers::pi / 2.0;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_supported(const EnsembleDims& dims) {
  if (dims.m != 2 && dims.m != 3) throw DomainError("quadrature oracle supports m = 2 or 3 only");
}

// Bures factor prod_{i<j} (l_i - l_j)^2 / (l_i + l_j); zero when a pair of
// eigenvalues vanishes together.
template <std::size_t M>
double bures_factor(const std::array<double, M>& l) {
  double f = 1.0;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = i + 1; j < M; ++j) {
      double s = l[i] + l[j];
      if (s <= 0.0) return 0.0;
      double diff = l[i] - l[j];
      f *= diff * diff / s;
    }
  return f;
}

struct Point {
  double weight;   // normalized density times Jacobian
  double entropy;
};

// lambda_1 = sin^2 u, lambda_2 = cos^2 u; the power (sin u cos u)^(2 alpha + 1)
// has a nonnegative integer exponent 2(n - m).
Point point_m2(double u, int power, double inv_c) {
  const double s = std::sin(u), c = std::cos(u);
  const std::array<double, 2> l = {s * s, c * c};
  const double w = 2.0 * std::pow(s * c, power) * bures_factor(l) * inv_c;
  return {w, -xlogx(l[0]) - xlogx(l[1])};
}

// lambda_1 = sin^2 u, lambda_2 = cos^2 u sin^2 v, lambda_3 = cos^2 u cos^2 v.
Point point_m3(double u, double v, int power, double inv_c) {
  const double su = std::sin(u), cu = std::cos(u);
  const double sv = std::sin(v), cv = std::cos(v);
  const std::array<double, 3> l = {su * su, cu * cu * sv * sv, cu * cu * cv * cv};
  const double w = 4.0 * std::pow(su, power) * std::pow(cu, 2 * power + 1) * std::pow(sv * cv, power) *
                   bures_factor(l) * inv_c;
  return {w, -xlogx(l[0]) - xlogx(l[1]) - xlogx(l[2])};
}

struct Integrator {
  const EnsembleDims& dims;
  double rel_tol;
  double inv_c;
  int power;

  template <typename G>
  QuadratureResult integrate(G g) const {
    QuadratureResult r;
    double err = 0.0;
    if (dims.m == 2) {
      auto f = [&](double u) {
        ++r.evaluations;
        return g(point_m2(u, power, inv_c));
      };
      r.value = Kronrod::integrate(f, 0.0, kHalfPi, kMaxDepth, rel_tol, &err);
      r.error_estimate = err;
      return r;
    }
    double inner_err_sum = 0.0;
    std::size_t outer_calls = 0;
    auto outer = [&](double u) {
      ++outer_calls;
      auto inner = [&](double v) {
        ++r.evaluations;
        return g(point_m3(u, v, power, inv_c));
      };
      double e = 0.0;
      double val = Kronrod::integrate(inner, 0.0, kHalfPi, kMaxDepth, rel_tol, &e);
      inner_err_sum += e;
      return val;
    };
    r.value = Kronrod::integrate(outer, 0.0, kHalfPi, kMaxDepth, rel_tol, &err);
    // Mean inner error times the outer interval length bounds the propagated part.
    r.error_estimate = err + (outer_calls ? inner_err_sum / outer_calls * kHalfPi : 0.0);
    return r;
  }
};

Integrator make_integrator(const EnsembleDims& dims) {
  require_supported(dims);
  const double rel_tol = dims.m == 2 ? 1e-13 : 1e-11;
  return Integrator{dims, rel_tol, std::exp(-log_normalization_constant(dims)),
                    static_cast<int>(dims.alpha.twice_value() + 1)};
}

double target_tolerance(const EnsembleDims& dims) { return dims.m == 2 ? 1e-10 : 1e-7; }

void flag_if_loose(QuadratureResult& r, double tol) {
  if (!(r.error_estimate <= tol) || !std::isfinite(r.value)) {
    r.warning = true;
    r.error_estimate *= 10.0;
  }
}

}  // namespace

double log_normalization_constant(const EnsembleDims& dims) {
  const double m = dims.m;
  const double a = dims.alpha.to_double();
  double log_c = -m * (m + 2.0 * a) * std::numbers::ln2 + 0.5 * m * std::log(std::numbers::pi) -
                 std::lgamma(m * (m + 2.0 * a + 1.0) / 2.0);
  for (int i = 1; i <= dims.m; ++i)
    log_c += std::lgamma(i + 1.0) + std::lgamma(i + 2.0 * a + 1.0) - std::lgamma(i + a + 0.5);
  return log_c;
}

QuadratureResult normalization_check(const EnsembleDims& dims) {
  const Integrator in = make_integrator(dims);
  QuadratureResult r = in.integrate([](const Point& p) { return p.weight; });
  flag_if_loose(r, target_tolerance(dims));
  return r;
}

std::vector<QuadratureResult> oracle_cumulants(const EnsembleDims& dims, int max_order) {
  if (max_order < 1 || max_order > 3) throw DomainError("oracle_cumulants supports orders 1..3");
  const Integrator in = make_integrator(dims);
  const double tol = target_tolerance(dims);

  const QuadratureResult z = in.integrate([](const Point& p) { return p.weight; });
  const QuadratureResult s1 = in.integrate([](const Point& p) { return p.weight * p.entropy; });
  const double mean = s1.value / z.value;

  std::vector<QuadratureResult> out;
  QuadratureResult k1;
  k1.value = mean;
  k1.error_estimate = s1.error_estimate / z.value + std::abs(mean) * z.error_estimate / z.value;
  k1.evaluations = z.evaluations + s1.evaluations;
  out.push_back(k1);

  // Second and third cumulants equal the central moments.
  for (int order = 2; order <= max_order; ++order) {
    QuadratureResult c = in.integrate([&](const Point& p) {
      const double dev = p.entropy - mean;
      return p.weight * (order == 2 ? dev * dev : dev * dev * dev);
    });
    c.value /= z.value;
    c.error_estimate = c.error_estimate / z.value + std::abs(c.value) * z.error_estimate / z.value;
    out.push_back(c);
  }
  for (auto& r : out) flag_if_loose(r, tol);
  return out;
}

}  // namespace bures
