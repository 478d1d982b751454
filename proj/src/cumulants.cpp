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

#include "bures/cumulants.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bures/errors.hpp"

namespace bures {

namespace {

constexpr unsigned kEvalDigits = 40;

BigRational q(long v) { return BigRational(v); }

BigRational ratio(const BigInteger& num, const BigInteger& den) { return make_rational(num, den); }

// E[L^j] for L = ln(theta), theta ~ Gamma(shape): j = 0..3.
std::array<ConstantPolynomial, 4> log_gamma_moments(HalfInteger shape) {
  ConstantPolynomial p0 = psi_exact(0, shape);
  ConstantPolynomial p1 = psi_exact(1, shape);
  ConstantPolynomial p2 = psi_exact(2, shape);
  return {ConstantPolynomial(1), p0, p0 * p0 + p1, p0 * p0 * p0 + q(3) * p0 * p1 + p2};
}

// Rising factorial (x)_k.
BigRational pochhammer(const BigRational& x, int k) {
  BigRational r(1);
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

}  // namespace

EnsembleDims::EnsembleDims(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw DomainError("dimensions must be positive");
  if (m > n) throw DomainError("require m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  alpha = HalfInteger::from_twice(2 * static_cast<std::int64_t>(n - m) - 1);
  d = HalfInteger::from_twice(2 * static_cast<std::int64_t>(m) * n - static_cast<std::int64_t>(m) * m);
}

ConstantPolynomial kappa1(const EnsembleDims& dims) {
  return psi_exact(0, dims.d + 1) - psi_exact(0, HalfInteger::half_odd(dims.n));
}

ConstantPolynomial kappa2(const EnsembleDims& dims) {
  const BigInteger m = dims.m, n = dims.n;
  BigRational c = ratio(2 * n * (2 * n + m) - m * m + 1, 2 * n * (2 * m * n - m * m + 2));
  return c * psi_exact(1, HalfInteger::half_odd(dims.n)) - psi_exact(1, dims.d + 1);
}

ConstantPolynomial kappa3(const EnsembleDims& dims) {
  const BigInteger m = dims.m, n = dims.n;
  const BigInteger e2 = 2 * m * n - m * m + 2;
  const BigInteger e4 = 2 * m * n - m * m + 4;
  const BigInteger mm2n = m - 2 * n;
  BigRational a1 = ratio(4 * m * m - 8 * m * n - 4 * n * n - 7, e2 * e4);
  BigRational a2 = ratio(2 * (m * m - 1) * (mm2n * mm2n - 1) * (-2 * m * m + 4 * m * n - 12 * n * n + 7),
                         n * e2 * e2 * e4 * (4 * n * n - 1));
  const HalfInteger h = HalfInteger::half_odd(dims.n);
  return psi_exact(2, dims.d + 1) + a1 * psi_exact(2, h) + a2 * psi_exact(1, h);
}

double skewness(const EnsembleDims& dims) {
  if (dims.m == 1) throw DegenerateError("skewness undefined at m = 1: the entropy is identically zero");
  BigFloat k2 = poly_eval(kappa2(dims), kEvalDigits);
  BigFloat k3 = poly_eval(kappa3(dims), kEvalDigits);
  return (k3 / (k2 * sqrt(k2))).to_double();
}

CumulantSet cumulants(const EnsembleDims& dims) {
  CumulantSet c;
  c.kappa1 = kappa1(dims);
  c.kappa2 = kappa2(dims);
  c.kappa3 = kappa3(dims);
  c.kappa1_f = poly_eval(c.kappa1, kEvalDigits).to_double();
  c.kappa2_f = poly_eval(c.kappa2, kEvalDigits).to_double();
  c.kappa3_f = poly_eval(c.kappa3, kEvalDigits).to_double();
  c.skewness = dims.m == 1 ? std::numeric_limits<double>::quiet_NaN() : skewness(dims);
  return c;
}

ConstantPolynomial kappa3_unconstrained(const EnsembleDims& dims) {
  const BigInteger m = dims.m, n = dims.n;
  BigRational b1 = ratio(-4 * m * m + 8 * m * n + 4 * n * n + 7, BigInteger(8));
  BigRational b2 = ratio(3 * (-m * m + 2 * m * n + 4 * n * n + 1), 4 * n);
  const BigInteger m2 = m * m, n2 = n * n;
  BigRational b3 = ratio(-m2 * m2 + 4 * m2 * m * n - 16 * m2 * n2 + 5 * m2 + 24 * m * n2 * n - 10 * m * n +
                             24 * n2 * n2 + 10 * n2 - 4,
                         2 * n * (2 * n - 1) * (2 * n + 1));
  const HalfInteger h = HalfInteger::half_odd(dims.n);
  ConstantPolynomial p0 = psi_exact(0, h);
  ConstantPolynomial p1 = psi_exact(1, h);
  ConstantPolynomial p2 = psi_exact(2, h);
  ConstantPolynomial body = b1 * p2 + b2 * (p0 * p1) + b3 * p1 + p0 * p0 * p0 + make_rational(9, 2) * (p0 * p0) +
                            q(3) * p0;
  return BigRational(m * (2 * n - m)) * body;
}

std::array<ConstantPolynomial, 3> constrained_moments(const EnsembleDims& dims) {
  return moments_cumulants_convert<ConstantPolynomial>({kappa1(dims), kappa2(dims), kappa3(dims)},
                                                       Conversion::CumulantsToMoments);
}

std::array<ConstantPolynomial, 3> unconstrained_moments(const EnsembleDims& dims) {
  const auto s = constrained_moments(dims);
  const std::array<ConstantPolynomial, 4> s_pow = {ConstantPolynomial(1), s[0], s[1], s[2]};
  const BigRational d = dims.d.to_rational();
  std::array<ConstantPolynomial, 3> out;
  for (int k = 1; k <= 3; ++k) {
    const auto l = log_gamma_moments(dims.d + k);
    // E[(L - S)^k] with L and S independent.
    ConstantPolynomial acc;
    BigInteger binom = 1;
    for (int j = 0; j <= k; ++j) {
      ConstantPolynomial t = BigRational(binom) * (l[k - j] * s_pow[j]);
      if (j % 2 == 1) t = -t;
      acc += t;
      binom = binom * (k - j) / (j + 1);
    }
    out[k - 1] = pochhammer(d, k) * acc;
  }
  return out;
}

ConstantPolynomial third_moment_conversion(const ConstantPolynomial& e_h_t3, const EnsembleDims& dims) {
  const auto s = constrained_moments(dims);
  const auto l = log_gamma_moments(dims.d + 3);
  const BigRational poch = pochhammer(dims.d.to_rational(), 3);
  return -(e_h_t3 / poch) + q(3) * l[1] * s[1] - q(3) * l[2] * s[0] + l[3];
}

double third_moment_conversion(double e_h_t3, const EnsembleDims& dims) {
  const double poch = pochhammer(dims.d.to_rational(), 3).get_d();
  const double rest = poly_eval(third_moment_conversion(ConstantPolynomial(), dims), kEvalDigits).to_double();
  return -e_h_t3 / poch + rest;
}

}  // namespace bures
