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


#ifndef BURES_IDENTITIES_HPP
#define BURES_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bures/big_rational.hpp"
#include "bures/constant_polynomial.hpp"

namespace bures {

// Parameters shared by anomalies, identities and re-summation fixtures. Every
// polygamma argument built from them must lie in (1/2)Z and be positive.
struct SumParams {
  int m = 1;
  std::optional<BigRational> a, b, c, alpha;
};

// name=value pairs for the parameters that are set, in the order m, a, b, c, alpha.
std::vector<std::pair<std::string, std::string>> describe(const SumParams& p);

// ---- anomalies -------------------------------------------------------------

struct AnomalySpec {
  int index = 1;  // 1..18
  SumParams params;
};

// Which of a, b, c an anomaly reads.
struct AnomalyShape {
  bool uses_a = false, uses_b = false, uses_c = false;
};
AnomalyShape anomaly_shape(int index);

// The finite sum itself. Throws DomainError naming k on a zero denominator or
// a nonpositive polygamma argument, or when a required parameter is missing.
ConstantPolynomial omega(const AnomalySpec& spec);

// Checks membership in the parameter families a in {m, alpha+m, 2alpha+m,
// 2alpha+2m}, b, c in {0, alpha, 2alpha, 2alpha+m}, and b != c for index 6.
// Returns the violated condition, or nullopt.
std::optional<std::string> anomaly_family_violation(const AnomalySpec& spec, const BigRational& alpha);

struct RelationOutcome {
  std::string relation;
  bool holds = false;
  std::string residual_text;  // "0" when holds
};

// omega7(a=m) == omega9(a=m), omega8(a=m) == omega10(a=m), and
// omega11(a=m) == sum psi0^2(m+1-k)/k.
std::vector<RelationOutcome> degenerate_anomaly_check(int m);

// ---- identities -----------------------------------------------------------

struct IdentityDefinition {
  std::string id;
  std::string lhs_text;
  std::vector<std::string> params;  // subset of {"a", "b", "c", "alpha"}
  // nullopt when admissible, otherwise the reason.
  std::function<std::optional<std::string>(const SumParams&)> domain;
  std::function<ConstantPolynomial(const SumParams&)> lhs;
  std::function<ConstantPolynomial(const SumParams&)> rhs;
};

const std::vector<IdentityDefinition>& identity_catalog();
// Throws std::invalid_argument for an unknown id.
const IdentityDefinition& find_identity(std::string_view id);

struct IdentityCase {
  std::string identity_id;
  SumParams params;
};

// LHS - RHS. Throws DomainError for inadmissible parameters.
ConstantPolynomial identity_residual(const IdentityCase& c);

struct GridCase {
  IdentityCase identity;
  // Set for boundary cases excluded from evaluation.
  std::optional<std::string> skip_reason;
};

// Full admissible grid for m = 1..max_m plus flagged boundary cases.
std::vector<GridCase> identity_grid(int max_m);

enum class CaseStatus { Pass, Fail, Skipped, Error };

struct CaseOutcome {
  IdentityCase identity;
  CaseStatus status = CaseStatus::Pass;
  std::string residual_text;  // nonzero residual or error message
  std::string skip_reason;
};

struct IdentityReport {
  std::vector<CaseOutcome> outcomes;
  std::size_t passed = 0, failed = 0, skipped = 0, errors = 0;
  bool all_pass() const { return failed == 0 && errors == 0 && passed > 0; }
};

// Evaluates cases on up to `threads` workers (0 = hardware concurrency);
// outcome order follows the input.
IdentityReport run_identity_cases(const std::vector<GridCase>& cases, unsigned threads = 0);

// ---- re-summation fixtures -------------------------------------------------

struct FixtureDefinition {
  std::string id;
  std::string serves;  // identity id whose derivation uses the fixture
  std::string sum_text;
};

const std::vector<FixtureDefinition>& resummation_fixtures();

// G(m) - sum_{i=1}^m Delta(i), where Delta(i) is the closed-form increment
// G(i) - G(i-1). Requires params.b > 0 (b plays the role of a - m).
ConstantPolynomial resummation_telescope_check(std::string_view fixture_id, const SumParams& params);

}  // namespace bures

#endif  // BURES_IDENTITIES_HPP
