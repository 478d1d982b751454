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

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "bures/constant_polynomial.hpp"

using bures::BigRational;
using bures::ConstantPolynomial;
using bures::PolyOp;
using bures::Symbol;
using bures::make_rational;

namespace {

const ConstantPolynomial g = ConstantPolynomial::symbol(Symbol::EulerGamma);
const ConstantPolynomial l2 = ConstantPolynomial::symbol(Symbol::Ln2);
const ConstantPolynomial z2 = ConstantPolynomial::symbol(Symbol::Zeta2);
const ConstantPolynomial z3 = ConstantPolynomial::symbol(Symbol::Zeta3);

// Degree <= 3, up to six terms, coefficients p/q with |p| <= 10^6.
ConstantPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 97), expo(0, 3), terms(0, 6);
  const ConstantPolynomial basis[4] = {g, l2, z2, z3};
  ConstantPolynomial p;
  const long count = terms(rng);
  for (long t = 0; t < count; ++t) {
    ConstantPolynomial mono(make_rational(num(rng), den(rng)));
    long budget = expo(rng);
    std::uniform_int_distribution<int> pick(0, 3);
    while (budget-- > 0) mono *= basis[pick(rng)];
    p += mono;
  }
  return p;
}

double eval(const ConstantPolynomial& p) { return bures::poly_eval(p, 30).to_double(); }

}  // namespace

TEST_CASE("poly_combine follows ring arithmetic") {
  CHECK(bures::poly_combine(g, g, PolyOp::Sub).is_zero());
  const ConstantPolynomial half_plus_g = g + ConstantPolynomial(make_rational(1, 2));
  CHECK(bures::poly_combine(half_plus_g, ConstantPolynomial(2), PolyOp::Mul) == 2 * BigRational(1) * g + 1);
  const ConstantPolynomial one_minus_g = ConstantPolynomial(1) - g;
  CHECK(bures::poly_combine(one_minus_g, one_minus_g, PolyOp::Mul) == ConstantPolynomial(1) - BigRational(2) * g + g * g);
}

TEST_CASE("zero test is structural") {
  CHECK(bures::poly_is_zero(ConstantPolynomial()));
  CHECK(bures::poly_is_zero(g - g));
  CHECK_FALSE(bures::poly_is_zero(z2 - ConstantPolynomial(make_rational(822, 500))));
}

TEST_CASE("poly_eval reproduces reference constants") {
  CHECK(std::abs(eval(g) - 0.5772157) < 5e-8);
  CHECK(std::abs(eval(z2) - 1.6449341) < 5e-8);
  CHECK(std::abs(eval(BigRational(2) * l2 - ConstantPolynomial(make_rational(7, 6))) - 0.2196277) < 5e-8);
  // zeta(2) is evaluated as pi^2/6 and zeta(3) against a fixed 30-digit literal.
  CHECK(bures::poly_eval(z2, 40).to_string(25).rfind("1.644934066848226436472415", 0) == 0);
  CHECK(bures::poly_eval(z3, 40).to_string(25).rfind("1.202056903159594285399738", 0) == 0);
  CHECK_THROWS_AS(bures::poly_eval(g, 10), std::invalid_argument);
}

TEST_CASE("poly_eval survives heavy cancellation") {
  // 10^39 (zeta(2) - D), D = pi^2/6 truncated to 39 decimals; reference from a 80-digit evaluation.
  const BigRational scale("1000000000000000000000000000000000000000");
  const BigRational truncated("1644934066848226436472415166646025189218/1000000000000000000000000000000000000000");
  const ConstantPolynomial close = scale * z2 - ConstantPolynomial(scale * truncated);
  CHECK(std::abs(bures::poly_eval(close, 20).to_double() - 0.94990120679843773556) < 1e-15);
}

TEST_CASE("canonical text round-trips") {
  const std::vector<std::string> samples = {"0",
                                           "-g",
                                           "2*l2 - 7/6",
                                           "5/4*z2 - 7307/3600",
                                           "75/8*z3 - 33/160*z2 - 295/27",
                                           "g^2 - 2*g + 1",
                                           "-3/2*g + 1/2",
                                           "g*l2*z2 - z3 + 4"};
  for (const auto& s : samples) {
    CAPTURE(s);
    CHECK(ConstantPolynomial::parse(s).to_string() == s);
  }
  CHECK(ConstantPolynomial::parse("z2*g - 1/2 + g*z2") == BigRational(2) * g * z2 - ConstantPolynomial(make_rational(1, 2)));
  CHECK(ConstantPolynomial::parse("l2^2*3") == BigRational(3) * l2 * l2);
  CHECK_THROWS_AS(ConstantPolynomial::parse("pi"), std::invalid_argument);
  CHECK_THROWS_AS(ConstantPolynomial::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(ConstantPolynomial::parse("2/0*g"), std::exception);
  CHECK_THROWS_AS(ConstantPolynomial::parse(""), std::invalid_argument);

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const ConstantPolynomial p = random_poly(rng);
    CHECK(ConstantPolynomial::parse(p.to_string()) == p);
  }
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const ConstantPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * ConstantPolynomial(1) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism to 1e-12 relative") {
  constexpr double kRelTol = 1e-12;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const ConstantPolynomial a = random_poly(rng), b = random_poly(rng);
    const double ea = eval(a), eb = eval(b);
    const double add_scale = std::max({1.0, std::abs(ea), std::abs(eb)});
    CHECK(std::abs(eval(bures::poly_combine(a, b, PolyOp::Add)) - (ea + eb)) <= kRelTol * add_scale);
    CHECK(std::abs(eval(bures::poly_combine(a, b, PolyOp::Sub)) - (ea - eb)) <= kRelTol * add_scale);
    const double mul_scale = std::max(1.0, std::abs(ea * eb));
    CHECK(std::abs(eval(bures::poly_combine(a, b, PolyOp::Mul)) - ea * eb) <= kRelTol * mul_scale);
  }
}
