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


#ifndef BURES_QUADRATURE_HPP
#define BURES_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include "bures/cumulants.hpp"

namespace bures {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  // Set when the target tolerance was not reached; error_estimate is then
  // enlarged tenfold.
  bool warning = false;
};

// ln C, where C is the mass of the unnormalized eigenvalue density over the
// whole (unordered) simplex.
double log_normalization_constant(const EnsembleDims& dims);

// Integral of the normalized density over the simplex; m in {2, 3}.
QuadratureResult normalization_check(const EnsembleDims& dims);

// kappa_1..kappa_max_order of the entropy by direct integration; m in {2, 3},
// 1 <= max_order <= 3. Target absolute tolerance 1e-10 (m = 2) / 1e-7 (m = 3).
std::vector<QuadratureResult> oracle_cumulants(const EnsembleDims& dims, int max_order = 3);

}  // namespace bures

#endif  // BURES_QUADRATURE_HPP
