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

#include <array>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <doctest.h>

#include "bures/cumulants.hpp"
#include "bures/errors.hpp"

using bures::ConstantPolynomial;
using bures::Conversion;
using bures::EnsembleDims;

namespace {

double value(const ConstantPolynomial& p) { return bures::poly_eval_double(p); }

// E[T^k], T = x ln x, x ~ Gamma(d, 1): the k-th s-derivative of Gamma(d+s)/Gamma(d) at s = k.
std::array<double, 3> gamma_entropy_moments(double d) {
  namespace bm = boost::math;
  std::array<double, 3> out{};
  for (int k = 1; k <= 3; ++k) {
    const double a = d + k;
    const double ratio = bm::tgamma_ratio(a, d);
    const double p0 = bm::digamma(a), p1 = bm::trigamma(a), p2 = bm::polygamma(2, a);
    const double deriv[3] = {p0, p0 * p0 + p1, p0 * p0 * p0 + 3.0 * p0 * p1 + p2};
    out[k - 1] = ratio * deriv[k - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("dimension validation") {
  CHECK_THROWS_AS(EnsembleDims(3, 2), bures::DomainError);
  CHECK_THROWS_AS(EnsembleDims(0, 2), bures::DomainError);
  const EnsembleDims dims(2, 3);
  CHECK(dims.alpha.to_string() == "1/2");
  CHECK(dims.d.to_string() == "4");
  CHECK(EnsembleDims(3, 3).d.to_string() == "9/2");
}

TEST_CASE("closed forms at small dimensions") {
  CHECK(bures::kappa1(EnsembleDims(2, 2)).to_string() == "2*l2 - 7/6");
  CHECK(bures::kappa1(EnsembleDims(2, 3)).to_string() == "2*l2 - 59/60");
  CHECK(bures::kappa2(EnsembleDims(2, 2)).to_string() == "13/8*z2 - 95/36");
  CHECK(bures::kappa2(EnsembleDims(2, 3)).to_string() == "5/4*z2 - 7307/3600");
  CHECK(bures::kappa3(EnsembleDims(2, 2)).to_string() == "75/8*z3 - 33/160*z2 - 295/27");
  CHECK(std::abs(value(bures::kappa1(EnsembleDims(2, 2))) - 0.2196277) < 5e-8);
  CHECK(std::abs(value(bures::kappa1(EnsembleDims(2, 3))) - 0.40296) < 5e-6);
  CHECK(std::abs(value(bures::kappa2(EnsembleDims(2, 2))) - 0.034129) < 5e-7);
  CHECK(std::abs(value(bures::kappa2(EnsembleDims(2, 3))) - 0.026445) < 5e-7);
  CHECK(std::abs(value(bures::kappa3(EnsembleDims(2, 2))) - 0.004090) < 5e-7);
  CHECK(std::abs(bures::skewness(EnsembleDims(2, 2)) - 0.6487) < 5e-5);
}

TEST_CASE("m = 1 is degenerate") {
  for (int n = 1; n <= 50; ++n) {
    const EnsembleDims dims(1, n);
    CHECK(bures::kappa1(dims).is_zero());
    CHECK(bures::kappa2(dims).is_zero());
    CHECK(bures::kappa3(dims).is_zero());
  }
  CHECK_THROWS_AS(bures::skewness(EnsembleDims(1, 3)), bures::DegenerateError);
  const auto set = bures::cumulants(EnsembleDims(1, 9));
  CHECK(std::isnan(set.skewness));
  CHECK(set.kappa1_f == 0.0);
}

TEST_CASE("sign and decay of the third cumulant") {
  for (int m = 2; m <= 12; ++m)
    for (int n = m; n <= 3 * m; ++n) {
      const EnsembleDims dims(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(value(bures::kappa2(dims)) > 0.0);
      const double k3 = value(bures::kappa3(dims));
      if (m == 2)
        CHECK(k3 != 0.0);
      else
        CHECK(k3 < 0.0);
    }
  for (int mult = 2; mult <= 3; ++mult)
    for (int m = 3; m < 12; ++m) {
      CAPTURE(mult);
      CAPTURE(m);
      CHECK(std::abs(value(bures::kappa3(EnsembleDims(m + 1, mult * (m + 1))))) <
            std::abs(value(bures::kappa3(EnsembleDims(m, mult * m)))));
    }
  for (int m = 4; m < 12; ++m)
    CHECK(std::abs(value(bures::kappa3(EnsembleDims(m + 1, m + 1)))) < std::abs(value(bures::kappa3(EnsembleDims(m, m)))));
  const double ratio = bures::skewness(EnsembleDims(8, 16)) / bures::skewness(EnsembleDims(16, 32));
  CHECK(std::abs(ratio - 2.0) < 0.3);
}

TEST_CASE("unconstrained third cumulant against the moment-derivative oracle") {
  const auto mom = gamma_entropy_moments(0.5);
  const double oracle = mom[2] - 3.0 * mom[1] * mom[0] + 2.0 * mom[0] * mom[0] * mom[0];
  const double formula = value(bures::kappa3_unconstrained(EnsembleDims(1, 1)));
  CHECK(std::abs(formula - oracle) < 1e-9);
  CHECK(std::abs(formula - 4.3238) < 5e-5);

  // m = 1 in general: x ~ Gamma(n - 1/2).
  for (int n = 1; n <= 6; ++n) {
    const auto mm = gamma_entropy_moments(n - 0.5);
    const auto exact = bures::unconstrained_moments(EnsembleDims(1, n));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(value(exact[k]) - mm[k]) <= 1e-12 * std::max(1.0, std::abs(mm[k])));
  }
}

TEST_CASE("unconstrained moments reproduce the unconstrained cumulant") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 6}, {5, 9}}) {
    const EnsembleDims dims(m, n);
    CAPTURE(m);
    CAPTURE(n);
    const auto k = bures::moments_cumulants_convert(bures::unconstrained_moments(dims), Conversion::MomentsToCumulants);
    CHECK((k[2] - bures::kappa3_unconstrained(dims)).is_zero());
  }
}

TEST_CASE("moment and cumulant conversion") {
  using T3 = std::array<double, 3>;
  CHECK(bures::moments_cumulants_convert(T3{0, 1, 0}, Conversion::MomentsToCumulants) == T3{0, 1, 0});
  CHECK(bures::moments_cumulants_convert(T3{1, 2, 4}, Conversion::MomentsToCumulants) == T3{1, 1, 0});
  CHECK(bures::moments_cumulants_convert(T3{0, 0, 0}, Conversion::CumulantsToMoments) == T3{0, 0, 0});
  for (int m = 2; m <= 5; ++m) {
    const EnsembleDims dims(m, m + 2);
    const std::array<ConstantPolynomial, 3> k = {bures::kappa1(dims), bures::kappa2(dims), bures::kappa3(dims)};
    const auto round = bures::moments_cumulants_convert(bures::moments_cumulants_convert(k, Conversion::CumulantsToMoments),
                                                        Conversion::MomentsToCumulants);
    for (int i = 0; i < 3; ++i) CHECK(round[i] == k[i]);
    const auto moments = bures::constrained_moments(dims);
    for (int i = 0; i < 3; ++i) CHECK(bures::moments_cumulants_convert(moments, Conversion::MomentsToCumulants)[i] == k[i]);
  }
}

TEST_CASE("third-moment conversion collapses at m = 1") {
  const EnsembleDims dims(1, 1);
  const ConstantPolynomial exact_t3 = bures::unconstrained_moments(dims)[2];
  CHECK(bures::third_moment_conversion(exact_t3, dims).is_zero());
  const double t3 = gamma_entropy_moments(0.5)[2];
  CHECK(std::abs(bures::third_moment_conversion(t3, dims)) < 1e-12);
  // Exact E_h[T^3] maps to the exact E_f[S^3] for m >= 2.
  for (auto [m, n] : {std::pair{2, 2}, {3, 4}, {4, 6}}) {
    const EnsembleDims dm(m, n);
    const ConstantPolynomial s3 = bures::third_moment_conversion(bures::unconstrained_moments(dm)[2], dm);
    CHECK((s3 - bures::constrained_moments(dm)[2]).is_zero());
  }
}
