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

#ifndef BURES_BIG_RATIONAL_HPP
#define BURES_BIG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bures/errors.hpp"

namespace bures {

// GMP rationals are kept canonical by every arithmetic operator; only raw
// numerator/denominator construction needs an explicit canonicalize().
using BigInteger = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(BigInteger(static_cast<long>(num)), BigInteger(static_cast<long>(den)));
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace bures

#endif  // BURES_BIG_RATIONAL_HPP
