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

#include "bures/polygamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "bures/errors.hpp"

namespace bures {

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

// prefix[l] = sum_{i<l} 1/t_i^(k+1) with t_i = i (integer family, i >= 1) or
// 2i+1 (odd family, i >= 0). Grows monotonically; entries never change.
class PrefixSums {
 public:
  BigRational get(int order, bool odd, std::int64_t l) {
    auto& table = tables_[order][odd ? 1 : 0];
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::int64_t>(table.size()) > l) return table[l];
    }
    std::unique_lock lock(mutex_);
    if (table.empty()) table.emplace_back(0);
    while (static_cast<std::int64_t>(table.size()) <= l) {
      std::int64_t i = static_cast<std::int64_t>(table.size()) - 1;
      // Integer family starts at i = 1, so its entry 0 and 1 are both zero.
      BigInteger t = odd ? BigInteger(static_cast<long>(2 * i + 1)) : BigInteger(static_cast<long>(i));
      if (t == 0) {
        table.push_back(table.back());
        continue;
      }
      BigInteger p = t;
      for (int e = 0; e < order; ++e) p *= t;
      table.push_back(table.back() + BigRational(1, p));
      table.back().canonicalize();
    }
    return table[l];
  }

 private:
  std::shared_mutex mutex_;
  std::array<std::array<std::vector<BigRational>, 2>, 3> tables_;
};

PrefixSums& prefix_sums() {
  static PrefixSums sums;
  return sums;
}

}  // namespace

ConstantPolynomial psi_exact(int order, HalfInteger arg) {
  if (order < 0 || order > 2) throw DomainError("polygamma order must be 0, 1 or 2");
  if (arg.twice_value() <= 0) throw DomainError("polygamma argument must be positive, got " + arg.to_string());

  using P = ConstantPolynomial;
  const std::int64_t l = arg.floor();
  if (arg.is_integer()) {
    // Sum over i = 1..l-1; the table indexes by upper bound l.
    BigRational partial = prefix_sums().get(order, false, l);
    switch (order) {
      case 0: return P(partial) - P::symbol(Symbol::EulerGamma);
      case 1: return P::symbol(Symbol::Zeta2) - P(partial);
      default: return BigRational(-2) * (P::symbol(Symbol::Zeta3) - P(partial));
    }
  }
  BigRational partial = prefix_sums().get(order, true, l);
  switch (order) {
    case 0:
      return BigRational(2) * P(partial) - P::symbol(Symbol::EulerGamma) - BigRational(2) * P::symbol(Symbol::Ln2);
    case 1: return BigRational(3) * P::symbol(Symbol::Zeta2) - BigRational(4) * P(partial);
    default: return BigRational(-2) * (BigRational(7) * P::symbol(Symbol::Zeta3) - BigRational(8) * P(partial));
  }
}

namespace {

// B_2j for j = 1..10.
constexpr std::array<double, 10> kBernoulli = {1.0 / 6,      -1.0 / 30,         1.0 / 42,     -1.0 / 30,
                                               5.0 / 66,     -691.0 / 2730,     7.0 / 6,      -3617.0 / 510,
                                               43867.0 / 798, -174611.0 / 330};

constexpr double kShiftThreshold = 12.0;

}  // namespace

double psi_float(int order, double x) {
  if (order < 0 || order > 2) throw DomainError("polygamma order must be 0, 1 or 2");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("polygamma argument must be positive and finite");

  // At most 12 upward steps.
  double shift = 0.0;
  while (x < kShiftThreshold) {
    double inv = 1.0 / x;
    switch (order) {
      case 0: shift -= inv; break;
      case 1: shift += inv * inv; break;
      default: shift -= 2.0 * inv * inv * inv; break;
    }
    x += 1.0;
  }

  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double eps = std::numeric_limits<double>::epsilon();
  double value = 0.0;
  double power = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  switch (order) {
    case 0:
      value = std::log(x) - 0.5 * inv;
      power = 1.0;
      break;
    case 1:
      value = inv + 0.5 * inv2;
      power = inv;
      break;
    default:
      value = -inv2 - inv2 * inv;
      power = inv2;
      break;
  }
  for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
    power *= inv2;
    const double b = kBernoulli[j - 1];
    double term = 0.0;
    switch (order) {
      case 0: term = -b / (2.0 * j) * power; break;
      case 1: term = b * power; break;
      default: term = -(2.0 * j + 1.0) * b * power; break;
    }
    if (std::abs(term) >= prev) break;
    value += term;
    prev = std::abs(term);
    if (prev <= eps * std::abs(value)) break;
  }
  return value + shift;
}

}  // namespace bures
