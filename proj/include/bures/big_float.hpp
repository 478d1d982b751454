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

#ifndef BURES_BIG_FLOAT_HPP
#define BURES_BIG_FLOAT_HPP

#include <mpfr.h>

#include <string>

#include "bures/big_rational.hpp"

namespace bures {

// Value-semantic MPFR number. Every value carries its own precision; binary
// operations round to the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(unsigned digits10 = 30);
  BigFloat(double value, unsigned digits10);
  BigFloat(const BigRational& value, unsigned digits10);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat euler_gamma(unsigned digits10);
  static BigFloat ln2(unsigned digits10);
  static BigFloat pi(unsigned digits10);
  static BigFloat zeta(unsigned long s, unsigned digits10);

  unsigned digits10() const;
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

  double to_double() const;
  std::string to_string(unsigned digits10) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // Binary exponent e with |x| in [2^(e-1), 2^e); meaningless for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  // x^(p/q) for small integers, used for kappa2^(3/2).
  friend BigFloat pow_rational(const BigFloat& x, long p, long q);

 private:
  explicit BigFloat(mpfr_prec_t bits, int /*tag*/);
  void promote_to(mpfr_prec_t bits);

  mpfr_t value_;
};

mpfr_prec_t digits10_to_bits(unsigned digits10);

}  // namespace bures

#endif  // BURES_BIG_FLOAT_HPP
