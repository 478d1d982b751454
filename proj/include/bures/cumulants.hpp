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


#ifndef BURES_CUMULANTS_HPP
#define BURES_CUMULANTS_HPP

#include <array>

#include "bures/constant_polynomial.hpp"
#include "bures/polygamma.hpp"

namespace bures {

// Subsystem dimensions with m <= n, alpha = n - m - 1/2 and d = mn - m^2/2.
struct EnsembleDims {
  int m = 1;
  int n = 1;
  HalfInteger alpha;
  HalfInteger d;

  // Throws DomainError unless 1 <= m <= n.
  EnsembleDims(int m_, int n_);
};

struct CumulantSet {
  ConstantPolynomial kappa1, kappa2, kappa3;
  double kappa1_f = 0.0, kappa2_f = 0.0, kappa3_f = 0.0;
  // NaN when m = 1.
  double skewness = 0.0;
};

ConstantPolynomial kappa1(const EnsembleDims& dims);
ConstantPolynomial kappa2(const EnsembleDims& dims);
ConstantPolynomial kappa3(const EnsembleDims& dims);
CumulantSet cumulants(const EnsembleDims& dims);

// kappa3 / kappa2^(3/2) from 40-digit evaluations. DegenerateError at m = 1.
double skewness(const EnsembleDims& dims);

// Third cumulant of T = sum x_i ln x_i under the unconstrained density.
ConstantPolynomial kappa3_unconstrained(const EnsembleDims& dims);

// Raw moments E_h[T^k], k = 1..3, from the factorization T = theta (ln theta - S)
// with theta ~ Gamma(d) independent of S.
std::array<ConstantPolynomial, 3> unconstrained_moments(const EnsembleDims& dims);

enum class Conversion { MomentsToCumulants, CumulantsToMoments };

template <typename T>
std::array<T, 3> moments_cumulants_convert(const std::array<T, 3>& v, Conversion direction) {
  const T& a = v[0];
  const T& b = v[1];
  const T& c = v[2];
  if (direction == Conversion::MomentsToCumulants) {
    T k2 = b - a * a;
    T k3 = c - T(3) * b * a + T(2) * a * a * a;
    return {a, k2, k3};
  }
  T m2 = b + a * a;
  T m3 = c + T(3) * b * a + a * a * a;
  return {a, m2, m3};
}

// E_f[S^3] from E_h[T^3]. The first two moments of S come from kappa1, kappa2.
double third_moment_conversion(double e_h_t3, const EnsembleDims& dims);
ConstantPolynomial third_moment_conversion(const ConstantPolynomial& e_h_t3, const EnsembleDims& dims);

// E_f[S^k], k = 1..3, from the exact cumulants.
std::array<ConstantPolynomial, 3> constrained_moments(const EnsembleDims& dims);

}  // namespace bures

#endif  // BURES_CUMULANTS_HPP
