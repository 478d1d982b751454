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

#ifndef BURES_CONSTANT_POLYNOMIAL_HPP
#define BURES_CONSTANT_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "bures/big_float.hpp"
#include "bures/big_rational.hpp"

namespace bures {

// Transcendental constants produced by psi_0, psi_1, psi_2 at integer and
// half-integer arguments. zeta(2) stays symbolic; pi only appears when a
// polynomial is evaluated.
enum class Symbol : std::uint8_t { EulerGamma = 0, Ln2 = 1, Zeta2 = 2, Zeta3 = 3 };

inline constexpr std::size_t kSymbolCount = 4;

std::string_view symbol_name(Symbol s);

// Exponent vector indexed by Symbol.
struct Monomial {
  std::array<std::uint16_t, kSymbolCount> exponents{};

  unsigned degree() const;
  std::uint16_t& operator[](Symbol s) { return exponents[static_cast<std::size_t>(s)]; }
  std::uint16_t operator[](Symbol s) const { return exponents[static_cast<std::size_t>(s)]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Graded-lex order, highest first: larger total degree wins, ties broken by
// comparing the exponents of z3, z2, l2, g in that order.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Element of Q[g, l2, z2, z3]. Zero coefficients are never stored, so two
// polynomials are equal iff their term maps are equal.
class ConstantPolynomial {
 public:
  using TermMap = std::map<Monomial, BigRational, GradedLexGreater>;

  ConstantPolynomial() = default;
  ConstantPolynomial(const BigRational& c);  // NOLINT(google-explicit-constructor)
  ConstantPolynomial(long c) : ConstantPolynomial(BigRational(c)) {}  // NOLINT
  static ConstantPolynomial symbol(Symbol s);
  static ConstantPolynomial term(const BigRational& coeff, const Monomial& mono);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  // Coefficient of a monomial, zero when absent.
  BigRational coefficient(const Monomial& mono) const;
  BigRational constant_term() const { return coefficient(Monomial{}); }

  ConstantPolynomial& operator+=(const ConstantPolynomial& rhs);
  ConstantPolynomial& operator-=(const ConstantPolynomial& rhs);
  ConstantPolynomial& operator*=(const ConstantPolynomial& rhs);
  ConstantPolynomial& operator*=(const BigRational& rhs);
  ConstantPolynomial operator-() const;

  friend ConstantPolynomial operator+(ConstantPolynomial a, const ConstantPolynomial& b) { return a += b; }
  friend ConstantPolynomial operator-(ConstantPolynomial a, const ConstantPolynomial& b) { return a -= b; }
  friend ConstantPolynomial operator*(const ConstantPolynomial& a, const ConstantPolynomial& b);
  friend ConstantPolynomial operator*(ConstantPolynomial a, const BigRational& b) { return a *= b; }
  friend ConstantPolynomial operator*(const BigRational& a, ConstantPolynomial b) { return b *= a; }
  friend ConstantPolynomial operator/(ConstantPolynomial a, const BigRational& b);
  friend bool operator==(const ConstantPolynomial& a, const ConstantPolynomial& b) { return a.terms_ == b.terms_; }

  // Canonical text, e.g. "75/8*z3 - 33/160*z2 - 295/27"; "0" for zero.
  std::string to_string() const;
  // Inverse of to_string. Also accepts any factor order inside a monomial and
  // arbitrary whitespace. Throws std::invalid_argument on malformed input.
  static ConstantPolynomial parse(std::string_view text);

 private:
  void add_term(const Monomial& mono, const BigRational& coeff);

  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

ConstantPolynomial poly_combine(const ConstantPolynomial& a, const ConstantPolynomial& b, PolyOp op);
inline bool poly_is_zero(const ConstantPolynomial& a) { return a.is_zero(); }

// Substitutes the constants and evaluates. The working precision is raised
// until cancellation between terms can no longer eat into the requested
// digits, so the result honours a 10^(2 - digits) relative error bound.
// Requires digits >= 15.
BigFloat poly_eval(const ConstantPolynomial& a, unsigned digits);
double poly_eval_double(const ConstantPolynomial& a);

}  // namespace bures

#endif  // BURES_CONSTANT_POLYNOMIAL_HPP
