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

#include <boost/math/special_functions/polygamma.hpp>
#include <doctest.h>

#include "bures/constant_polynomial.hpp"
#include "bures/errors.hpp"
#include "bures/polygamma.hpp"

using bures::HalfInteger;
using bures::psi_exact;

namespace {

double boost_psi(int order, double x) { return boost::math::polygamma(order, x); }

}  // namespace

TEST_CASE("HalfInteger arithmetic") {
  const HalfInteger h = HalfInteger::half_odd(2);
  CHECK(h.twice_value() == 5);
  CHECK(h.to_string() == "5/2");
  CHECK(HalfInteger::integer(3).to_string() == "3");
  CHECK(h.floor() == 2);
  CHECK(HalfInteger::from_twice(-3).floor() == -2);
  CHECK((h + HalfInteger::half_odd(0)) == HalfInteger::integer(3));
  CHECK((h - 1) == HalfInteger::half_odd(1));
  CHECK(HalfInteger::half_odd(0) < HalfInteger::integer(1));
  CHECK(h.to_rational() == bures::make_rational(5, 2));
}

TEST_CASE("psi_exact closed forms") {
  CHECK(psi_exact(0, 1).to_string() == "-g");
  CHECK(psi_exact(0, HalfInteger::half_odd(2)).to_string() == "-2*l2 - g + 8/3");
  CHECK(psi_exact(1, 1).to_string() == "z2");
  CHECK(psi_exact(2, HalfInteger::half_odd(0)).to_string() == "-14*z3");
  CHECK(psi_exact(1, 3).to_string() == "z2 - 5/4");
  CHECK(psi_exact(2, 1).to_string() == "-2*z3");
  CHECK_THROWS_AS(psi_exact(0, 0), bures::DomainError);
  CHECK_THROWS_AS(psi_exact(0, HalfInteger::from_twice(-1)), bures::DomainError);
  CHECK_THROWS_AS(psi_exact(3, 1), bures::DomainError);
}

TEST_CASE("psi_exact agrees with Boost polygamma") {
  constexpr double kRelTol = 1e-13;
  for (int order = 0; order <= 2; ++order)
    for (std::int64_t twice = 1; twice <= 400; twice += (twice < 40 ? 1 : 37)) {
      const HalfInteger x = HalfInteger::from_twice(twice);
      const double exact = bures::poly_eval_double(psi_exact(order, x));
      const double ref = boost_psi(order, x.to_double());
      CAPTURE(order);
      CAPTURE(twice);
      CHECK(std::abs(exact - ref) <= kRelTol * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("psi_float matches references") {
  CHECK(std::abs(bures::psi_float(0, 1.0) + 0.5772157) < 5e-8);
  CHECK(std::abs(bures::psi_float(1, 3.0) - 0.3949341) < 5e-8);
  // Asymptotic oracle: ln x - 1/(2x) - 1/(12x^2) + 1/(120x^4).
  const double x = 1e6;
  const double asym = std::log(x) - 0.5 / x - 1.0 / (12.0 * x * x);
  CHECK(std::abs(bures::psi_float(0, x) - asym) < 1e-13);
  constexpr double kRelTol = 1e-14;
  for (int order = 0; order <= 2; ++order)
    for (double v : {0.1, 0.5, 1.25, 3.0, 7.5, 11.9, 12.1, 40.0, 1234.5}) {
      CAPTURE(order);
      CAPTURE(v);
      const double ref = boost_psi(order, v);
      CHECK(std::abs(bures::psi_float(order, v) - ref) <= kRelTol * std::max(1.0, std::abs(ref)) * 10);
    }
  CHECK_THROWS_AS(bures::psi_float(0, 0.0), bures::DomainError);
  CHECK_THROWS_AS(bures::psi_float(0, -2.0), bures::DomainError);
  CHECK_THROWS_AS(bures::psi_float(4, 1.0), bures::DomainError);
}
