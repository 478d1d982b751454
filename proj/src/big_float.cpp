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

#include "bures/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace bures {

mpfr_prec_t digits10_to_bits(unsigned digits10) {
  // 3.3219... bits per decimal digit, plus a few guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 8;
}

BigFloat::BigFloat(mpfr_prec_t bits, int) { mpfr_init2(value_, bits); }

BigFloat::BigFloat(unsigned digits10) : BigFloat(digits10_to_bits(digits10), 0) {
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, unsigned digits10) : BigFloat(digits10_to_bits(digits10), 0) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, unsigned digits10) : BigFloat(digits10_to_bits(digits10), 0) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.bits(), 0) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::euler_gamma(unsigned digits10) {
  BigFloat r(digits10_to_bits(digits10), 0);
  mpfr_const_euler(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln2(unsigned digits10) {
  BigFloat r(digits10_to_bits(digits10), 0);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(unsigned digits10) {
  BigFloat r(digits10_to_bits(digits10), 0);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zeta(unsigned long s, unsigned digits10) {
  BigFloat r(digits10_to_bits(digits10), 0);
  mpfr_zeta_ui(r.value_, s, MPFR_RNDN);
  return r;
}

unsigned BigFloat::digits10() const {
  return static_cast<unsigned>(std::floor((bits() - 8) / 3.3219280948873623));
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(unsigned digits10) const {
  std::vector<char> buf(digits10 + 32);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits10), value_);
  if (n < 0) return "nan";
  if (static_cast<std::size_t>(n) >= buf.size()) {
    buf.resize(n + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits10), value_);
  }
  return std::string(buf.data());
}

void BigFloat::promote_to(mpfr_prec_t bits) {
  if (bits > this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  promote_to(rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  promote_to(rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  promote_to(rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  promote_to(rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat pow_rational(const BigFloat& x, long p, long q) {
  BigFloat r(x);
  if (q != 1) mpfr_rootn_ui(r.value_, r.value_, static_cast<unsigned long>(q), MPFR_RNDN);
  mpfr_pow_si(r.value_, r.value_, p, MPFR_RNDN);
  return r;
}

}  // namespace bures
