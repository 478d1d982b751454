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


#ifndef BURES_POLYGAMMA_HPP
#define BURES_POLYGAMMA_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "bures/big_rational.hpp"
#include "bures/constant_polynomial.hpp"

namespace bures {

// A value in (1/2)Z stored as twice its value. 64 bits covers every
// argument reachable from realistic (m, n).
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }
  static constexpr HalfInteger integer(std::int64_t v) { return HalfInteger(2 * v); }
  // v + 1/2
  static constexpr HalfInteger half_odd(std::int64_t v) { return HalfInteger(2 * v + 1); }

  constexpr std::int64_t twice_value() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Integer part for integer values, v for v + 1/2 (floor).
  constexpr std::int64_t floor() const { return twice_ >= 0 ? twice_ / 2 : -((1 - twice_) / 2); }
  BigRational to_rational() const { return make_rational(twice_, 2); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string to_string() const;

  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
  constexpr HalfInteger operator+(std::int64_t k) const { return HalfInteger(twice_ + 2 * k); }
  constexpr HalfInteger operator-(std::int64_t k) const { return HalfInteger(twice_ - 2 * k); }
  // 2x is always an integer.
  constexpr std::int64_t doubled() const { return twice_; }
  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

// psi_k(arg) for k in {0,1,2} as an exact element of the constant ring.
// Integer arguments produce {g, z2, z3}; half-odd ones also produce l2.
// Throws DomainError for arg <= 0 or k outside {0,1,2}.
ConstantPolynomial psi_exact(int order, HalfInteger arg);
inline ConstantPolynomial psi_exact(int order, std::int64_t arg) { return psi_exact(order, HalfInteger::integer(arg)); }

// Double-precision polygamma for x > 0, relative error around 1e-15 away
// from the zero of psi_0.
double psi_float(int order, double x);

}  // namespace bures

#endif  // BURES_POLYGAMMA_HPP
