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

#include "bures/identities.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "bures/errors.hpp"
#include "bures/polygamma.hpp"

namespace bures {

namespace {

using P = ConstantPolynomial;
using R = BigRational;

HalfInteger to_half(const R& x) {
  R twice = x * 2;
  if (twice.get_den() != 1) throw DomainError("polygamma argument " + x.get_str() + " is not a half-integer");
  if (!twice.get_num().fits_slong_p()) throw DomainError("polygamma argument out of range");
  return HalfInteger::from_twice(twice.get_num().get_si());
}

P p0(const R& x) { return psi_exact(0, to_half(x)); }
P p1(const R& x) { return psi_exact(1, to_half(x)); }
P p2(const R& x) { return psi_exact(2, to_half(x)); }
P sq(const P& x) { return x * x; }
P cube(const P& x) { return x * x * x; }

R inv(const R& x) {
  if (x == 0) throw DomainError("division by zero");
  return R(1) / x;
}

const R kHalf = make_rational(1, 2);

// sum_{k=1}^m f(k); failures are rethrown with the offending k.
template <typename F>
P sum(int m, F f) {
  P acc;
  for (int k = 1; k <= m; ++k) {
    try {
      acc += f(R(k));
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " at k=" + std::to_string(k));
    }
  }
  return acc;
}

const R& need(const std::optional<R>& v, const char* name) {
  if (!v) throw DomainError(std::string("missing parameter ") + name);
  return *v;
}

bool is_half_integer(const R& x) { return R(x * 2).get_den() == 1; }

}  // namespace

std::vector<std::pair<std::string, std::string>> describe(const SumParams& p) {
  std::vector<std::pair<std::string, std::string>> out{{"m", std::to_string(p.m)}};
  if (p.a) out.emplace_back("a", p.a->get_str());
  if (p.b) out.emplace_back("b", p.b->get_str());
  if (p.c) out.emplace_back("c", p.c->get_str());
  if (p.alpha) out.emplace_back("alpha", p.alpha->get_str());
  return out;
}

// ---- anomalies -------------------------------------------------------------

AnomalyShape anomaly_shape(int index) {
  switch (index) {
    case 1: case 2: case 7: case 8: case 9: case 10: case 11: case 12: case 13: case 14: case 17: case 18:
      return {true, false, false};
    case 3: case 4: case 5: case 6:
      return {false, true, true};
    case 15: case 16:
      return {false, true, false};
    default:
      throw DomainError("anomaly index must be in 1..18, got " + std::to_string(index));
  }
}

P omega(const AnomalySpec& spec) {
  const AnomalyShape shape = anomaly_shape(spec.index);
  const int m = spec.params.m;
  if (m < 1) throw DomainError("m must be positive");
  const R mm(m);
  const R a = shape.uses_a ? need(spec.params.a, "a") : R(0);
  const R b = shape.uses_b ? need(spec.params.b, "b") : R(0);
  const R c = shape.uses_c ? need(spec.params.c, "c") : R(0);
  auto den = [](const R& x) -> R {
    if (x == 0) throw DomainError("zero denominator");
    return x;
  };
  switch (spec.index) {
    case 1: return sum(m, [&](const R& k) { return p0(k) / den(a + 1 - k); });
    case 2: return sum(m, [&](const R& k) { return p0(a + 1 - k) / k; });
    case 3: return sum(m, [&](const R& k) { return p0(k + b) / den((k + c) * (k + c)); });
    case 4: return sum(m, [&](const R& k) { return sq(p0(k + b)) / den(k + c); });
    case 5: return sum(m, [&](const R& k) { return p1(k + b) / den(k + c); });
    case 6: return sum(m, [&](const R& k) { return p0(k + b) / den(k + c); });
    case 7: return sum(m, [&](const R& k) { return p0(k) / den((a + 1 - k) * (a + 1 - k)); });
    case 8: return sum(m, [&](const R& k) { return sq(p0(k)) / den(a + 1 - k); });
    case 9: return sum(m, [&](const R& k) { return p0(a + 1 - k) / (k * k); });
    case 10: return sum(m, [&](const R& k) { return sq(p0(a + 1 - k)) / k; });
    case 11: return sum(m, [&](const R& k) { return p0(k) * p0(k + a - mm) / (mm + 1 - k); });
    case 12: return sum(m, [&](const R& k) { return p0(k) * p0(a + 1 - k) / (mm + 1 - k); });
    case 13: return sum(m, [&](const R& k) { return p0(k) * p0(a + 1 - k) / den(a + 1 - k); });
    case 14: return sum(m, [&](const R& k) { return p0(k) * p0(a + 1 - k) / k; });
    case 15: return sum(m, [&](const R& k) { return p0(k) * p0(k + b) / den(k + b); });
    case 16: return sum(m, [&](const R& k) { return p0(k) * p0(k + b) / k; });
    case 17: return sum(m, [&](const R& k) { return p1(k) / den(a + 1 - k); });
    default: return sum(m, [&](const R& k) { return p1(a + 1 - k) / k; });
  }
}

std::optional<std::string> anomaly_family_violation(const AnomalySpec& spec, const R& alpha) {
  const AnomalyShape shape = anomaly_shape(spec.index);
  const R mm(spec.params.m);
  if (shape.uses_a) {
    if (!spec.params.a) return "missing parameter a";
    const R& a = *spec.params.a;
    if (a != mm && a != alpha + mm && a != 2 * alpha + mm && a != 2 * alpha + 2 * mm)
      return "a=" + a.get_str() + " is not one of m, alpha+m, 2alpha+m, 2alpha+2m";
  }
  auto bc_ok = [&](const R& v) { return v == 0 || v == alpha || v == 2 * alpha || v == 2 * alpha + mm; };
  if (shape.uses_b) {
    if (!spec.params.b) return "missing parameter b";
    if (!bc_ok(*spec.params.b)) return "b=" + spec.params.b->get_str() + " is not one of 0, alpha, 2alpha, 2alpha+m";
  }
  if (shape.uses_c) {
    if (!spec.params.c) return "missing parameter c";
    if (!bc_ok(*spec.params.c)) return "c=" + spec.params.c->get_str() + " is not one of 0, alpha, 2alpha, 2alpha+m";
  }
  if (spec.index == 6 && *spec.params.b == *spec.params.c) return "omega6 requires b != c";
  return std::nullopt;
}

std::vector<RelationOutcome> degenerate_anomaly_check(int m) {
  if (m < 1) throw DomainError("m must be positive");
  SumParams at_m;
  at_m.m = m;
  at_m.a = R(m);
  auto om = [&](int index) { return omega(AnomalySpec{index, at_m}); };
  const R mm(m);
  auto outcome = [](std::string name, const P& residual) {
    return RelationOutcome{std::move(name), residual.is_zero(), residual.to_string()};
  };
  std::vector<RelationOutcome> out;
  out.push_back(outcome("omega7(m) = omega9(m)", om(7) - om(9)));
  out.push_back(outcome("omega8(m) = omega10(m)", om(8) - om(10)));
  out.push_back(outcome("omega11(m) = sum psi0^2(m+1-k)/k",
                        om(11) - sum(m, [&](const R& k) { return sq(p0(mm + 1 - k)) / k; })));
  return out;
}

// ---- identities -----------------------------------------------------------

namespace {

using Domain = std::function<std::optional<std::string>(const SumParams&)>;
using Side = std::function<P(const SumParams&)>;

std::optional<std::string> require_half(const std::optional<R>& v, const char* name) {
  if (!v) return std::string("missing parameter ") + name;
  if (!is_half_integer(*v)) return std::string(name) + " must be an integer or half-integer";
  return std::nullopt;
}

Domain no_params() {
  return [](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    return std::nullopt;
  };
}

Domain a_greater_than_m() {
  return [](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    if (auto e = require_half(p.a, "a")) return e;
    if (*p.a <= p.m) return "requires a > m";
    return std::nullopt;
  };
}

Domain b_at_least(int lower, bool strict) {
  return [lower, strict](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    if (auto e = require_half(p.b, "b")) return e;
    if (strict ? *p.b <= lower : *p.b < lower) return strict ? "requires b > 0" : "requires b >= 0";
    return std::nullopt;
  };
}

Domain b_c_distinct_nonnegative() {
  return [](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    if (auto e = require_half(p.b, "b")) return e;
    if (auto e = require_half(p.c, "c")) return e;
    if (*p.b < 0 || *p.c < 0) return "requires b, c >= 0";
    if (*p.b == *p.c) return "requires b != c";
    return std::nullopt;
  };
}

Domain distinct_positive_integers() {
  return [](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    for (const auto* v : {&p.a, &p.b, &p.c}) {
      if (!*v) return "missing parameter";
      if ((*v)->get_den() != 1 || **v <= 0) return "a, b, c must be positive integers";
    }
    if (*p.a == *p.b || *p.a == *p.c || *p.b == *p.c) return "a, b, c must be distinct";
    return std::nullopt;
  };
}

Domain a_b_positive() {
  return [](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    if (auto e = require_half(p.a, "a")) return e;
    if (auto e = require_half(p.b, "b")) return e;
    if (*p.a <= 0 || *p.b <= 0) return "requires a, b > 0";
    return std::nullopt;
  };
}

Domain alpha_positive() {
  return [](const SumParams& p) -> std::optional<std::string> {
    if (p.m < 1) return "m must be positive";
    if (auto e = require_half(p.alpha, "alpha")) return e;
    if (*p.alpha <= 0) return "requires alpha > 0";
    return std::nullopt;
  };
}

// Shorthands for the recurring values psi0(a+1), psi0(a-m+1), psi0(m+1), psi0(1).
struct Reflect {
  R a, d, mm;
  P A, B, M, O;
  explicit Reflect(const SumParams& p)
      : a(*p.a), d(*p.a - p.m), mm(p.m), A(p0(a + 1)), B(p0(d + 1)), M(p0(mm + 1)), O(p0(R(1))) {}
};

std::vector<IdentityDefinition> build_catalog() {
  std::vector<IdentityDefinition> cat;
  auto add = [&](std::string id, std::string text, std::vector<std::string> params, Domain domain, Side lhs,
                 Side rhs) {
    cat.push_back(IdentityDefinition{std::move(id), std::move(text), std::move(params), std::move(domain),
                                     std::move(lhs), std::move(rhs)});
  };
  const R one(1);

  add("psi0k_over_mp1mk", "sum psi0(k)/(m+1-k)", {}, no_params(),
      [](const SumParams& p) {
        const R mm(p.m);
        return sum(p.m, [&](const R& k) { return p0(k) / (mm + 1 - k); });
      },
      [one](const SumParams& p) {
        const R mm(p.m);
        return sq(p0(mm + 1)) - p0(one) * p0(mm + 1) + p1(mm + 1) - p1(one);
      });

  add("psi0mp1mk_over_k", "sum psi0(m+1-k)/k", {}, no_params(),
      [](const SumParams& p) {
        const R mm(p.m);
        return sum(p.m, [&](const R& k) { return p0(mm + 1 - k) / k; });
      },
      [one](const SumParams& p) {
        const R mm(p.m);
        return sq(p0(mm + 1)) - p0(one) * p0(mm + 1) + p1(mm + 1) - p1(one);
      });

  add("swap_b_c", "sum psi0(k+b)/(k+c)", {"b", "c"}, b_c_distinct_nonnegative(),
      [](const SumParams& p) {
        const R b = *p.b, c = *p.c;
        return sum(p.m, [&](const R& k) { return p0(k + b) / (k + c); });
      },
      [](const SumParams& p) {
        const R b = *p.b, c = *p.c, mm(p.m);
        return -sum(p.m, [&](const R& k) { return p0(k + c) / (k + b); }) + p0(mm + c + 1) * p0(mm + b + 1) -
               p0(c + 1) * p0(b + 1) + inv(c - b) * (p0(mm + c + 1) - p0(mm + b + 1) - p0(c + 1) + p0(b + 1));
      });

  add("reflect_shift_a_over_k", "sum psi0(a+1-k)/k", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p0(a + 1 - k) / k; });
      },
      [](const SumParams& p) {
        const Reflect r(p);
        const P D = p0(r.d);
        return -sum(p.m, [&](const R& k) { return p0(k + r.d) / k; }) +
               kHalf * (R(-2) * r.A * (D - r.M + r.O) + (D + R(2) * r.M - R(2) * r.O) * D - p1(r.d) + sq(r.A) +
                        p1(r.a + 1));
      });

  add("psi0k_over_reflect_a", "sum psi0(k)/(a+1-k)", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p0(k) / (a + 1 - k); });
      },
      [](const SumParams& p) {
        const Reflect r(p);
        const P D = p0(r.d);
        return -sum(p.m, [&](const R& k) { return p0(k + r.d) / k; }) +
               kHalf * (sq(r.A - D) + R(2) * r.M * (-r.B + D + r.A) - R(2) * r.O * D - p1(r.d) + p1(r.a + 1));
      });

  add("psi0_over_k2", "sum psi0(k)/k^2", {}, no_params(),
      [](const SumParams& p) { return sum(p.m, [&](const R& k) { return p0(k) / (k * k); }); },
      [one](const SumParams& p) {
        const R mm(p.m);
        return sum(p.m, [&](const R& k) { return p1(k) / k; }) - p0(mm + 1) * p1(mm + 1) - kHalf * p2(mm + 1) +
               p0(one) * p1(one) + kHalf * p2(one);
      });

  add("psi0_reflect_over_k2", "sum psi0(m+1-k)/k^2", {}, no_params(),
      [](const SumParams& p) {
        const R mm(p.m);
        return sum(p.m, [&](const R& k) { return p0(mm + 1 - k) / (k * k); });
      },
      [one](const SumParams& p) {
        const R mm(p.m);
        return sum(p.m, [&](const R& k) { return p1(k) / k; }) + p0(one) * p1(mm + 1) +
               p0(mm + 1) * (p1(one) - R(2) * p1(mm + 1)) - p2(mm + 1) + p2(one);
      });

  add("psi0sq_reflect_over_k", "sum psi0^2(m+1-k)/k", {}, no_params(),
      [](const SumParams& p) {
        const R mm(p.m);
        return sum(p.m, [&](const R& k) { return sq(p0(mm + 1 - k)) / k; });
      },
      [one](const SumParams& p) {
        const R mm(p.m);
        const P M = p0(mm + 1), O = p0(one);
        return sum(p.m, [&](const R& k) { return p1(k) / k; }) + cube(M) - O * sq(M) - R(2) * p1(one) * M +
               p1(mm + 1) * M + O * p1(mm + 1);
      });

  add("psi0_shift_over_shift_sq", "sum psi0(k+b)/(k+b)^2", {"b"}, b_at_least(0, false),
      [](const SumParams& p) {
        const R b = *p.b;
        return sum(p.m, [&](const R& k) { return p0(k + b) / ((k + b) * (k + b)); });
      },
      [](const SumParams& p) {
        const R b = *p.b, mm(p.m);
        return sum(p.m, [&](const R& k) { return p1(k + b) / (k + b); }) - p0(b + mm + 1) * p1(b + mm + 1) -
               kHalf * p2(b + mm + 1) + p0(b + 1) * p1(b + 1) + kHalf * p2(b + 1);
      });

  add("psi0_shift_over_k2", "sum psi0(k+b)/k^2", {"b"}, b_at_least(0, true),
      [](const SumParams& p) {
        const R b = *p.b;
        return sum(p.m, [&](const R& k) { return p0(k + b) / (k * k); });
      },
      [one](const SumParams& p) {
        const R b = *p.b, mm(p.m);
        return sum(p.m, [&](const R& k) { return p1(k) / (k + b); }) -
               inv(b * b) * (p0(b + mm + 1) - p0(b + 1) - p0(mm + 1) + p0(one)) - p1(mm + 1) * p0(b + mm + 1) -
               inv(b) * (p1(one) - p1(mm + 1)) + p1(one) * p0(b + 1);
      });

  add("psi0_over_shift_sq", "sum psi0(k)/(k+b)^2", {"b"}, b_at_least(0, true),
      [](const SumParams& p) {
        const R b = *p.b;
        return sum(p.m, [&](const R& k) { return p0(k) / ((k + b) * (k + b)); });
      },
      [one](const SumParams& p) {
        const R b = *p.b, mm(p.m);
        return sum(p.m, [&](const R& k) { return p1(k + b) / k; }) +
               inv(b * b) * (p0(b + mm + 1) - p0(b + 1) - p0(mm + 1) + p0(one)) - p0(mm + 1) * p1(b + mm + 1) -
               inv(b) * (p1(b + mm + 1) - p1(b + 1)) + p0(one) * p1(b + 1);
      });

  add("psi0_shift_b_over_shift_c_sq", "sum psi0(k+b)/(k+c)^2", {"b", "c"}, b_c_distinct_nonnegative(),
      [](const SumParams& p) {
        const R b = *p.b, c = *p.c;
        return sum(p.m, [&](const R& k) { return p0(k + b) / ((k + c) * (k + c)); });
      },
      [](const SumParams& p) {
        const R b = *p.b, c = *p.c, mm(p.m);
        return sum(p.m, [&](const R& k) { return p1(k + c) / (k + b); }) +
               inv((c - b) * (c - b)) * (p0(c + mm + 1) - p0(c + 1) - p0(b + mm + 1) + p0(b + 1)) +
               inv(c - b) * (p1(c + 1) - p1(c + mm + 1)) - p1(c + mm + 1) * p0(b + mm + 1) +
               p1(c + 1) * p0(b + 1);
      });

  add("psi0_over_reflect_a_sq", "sum psi0(k)/(a+1-k)^2", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p0(k) / ((a + 1 - k) * (a + 1 - k)); });
      },
      [](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        return sum(p.m, [&](const R& k) { return p1(k + r.d) / k; }) +
               inv(r.d * r.d) * (-r.B + r.A - r.M + r.O) - p1(a1) * r.M + r.A * (p1(d1) - p1(a1)) +
               inv(r.d) * (p1(d1) - p1(a1)) + r.B * (p1(a1) - p1(d1)) + r.O * p1(d1) + kHalf * p2(d1) -
               kHalf * p2(a1);
      });

  add("psi0sq_over_reflect_a", "sum psi0^2(k)/(a+1-k)", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return sq(p0(k)) / (a + 1 - k); });
      },
      [](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return sum(p.m, [&](const R& k) { return sq(p0(k + r.d)) / k + sq(p0(k)) / (k + r.d) + p1(k + r.d) / (k + r.d); }) +
               (R(2 * inv(r.d)) - R(2) * A) * sum(p.m, [&](const R& k) { return p0(k + r.d) / k; }) +
               inv(r.d * r.d) * (B - A + M - O) + inv(r.d) * (R(2) * A * (-B - M + O) + sq(B) + sq(A)) +
               make_rational(1, 6) * (R(-6) * sq(A) * (B - M) - R(6) * A * (-sq(B) + R(2) * O * B + p1(d1)) -
                                      R(2) * cube(B) + R(6) * O * sq(B) - R(6) * O * p1(d1) + R(6) * B * p1(d1) +
                                      p2(d1) + R(2) * cube(A) + R(6) * O * p1(a1) - p2(a1));
      });

  add("psi1_reflect_a_over_k", "sum psi1(a+1-k)/k", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p1(a + 1 - k) / k; });
      },
      [](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return -sum(p.m, [&](const R& k) { return p1(k + r.d) / k; }) + inv(r.d * r.d) * (B - A + M - O) +
               p1(a1) * (-B + A + M - O) + inv(r.d) * (p1(a1) - p1(d1)) +
               kHalf * (R(2) * (B - A + M - O) * p1(d1) - p2(d1) + p2(a1));
      });

  add("psi1_over_reflect_a", "sum psi1(k)/(a+1-k)", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p1(k) / (a + 1 - k); });
      },
      [one](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return sum(p.m, [&](const R& k) { return -(p1(k + r.d) / k) + p1(k) / (k + r.d) - p1(k + r.d) / (k + r.d); }) -
               p1(r.mm + 1) * B + inv(r.d * r.d) * (B - A + M - O) + inv(r.d) * (p1(a1) - p1(d1)) +
               kHalf * (R(-2) * p1(a1) * (B - M + O) + R(2) * p1(r.mm + 1) * B - p2(d1) + p2(a1)) +
               A * (p1(a1) - p1(one)) + p1(one) * A;
      });

  add("psi0_reflect_a_over_k2", "sum psi0(a+1-k)/k^2", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p0(a + 1 - k) / (k * k); });
      },
      [one](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return sum(p.m, [&](const R& k) { return p1(k + r.d) / k - p1(k) / (k + r.d) + p1(k + r.d) / (k + r.d); }) +
               inv(r.d * r.d) * (-B + A - M + O) + inv(r.d) * (p1(d1) - p1(a1)) +
               kHalf * (R(2) * p1(a1) * (B - M + O) - R(2) * p1(r.mm + 1) * B + p2(d1) - p2(a1)) +
               A * (p1(one) - p1(a1));
      });

  add("psi0_psi0_reflect_over_reflect_a", "sum psi0(k) psi0(a+1-k)/(a+1-k)", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p0(k) * p0(a + 1 - k) / (a + 1 - k); });
      },
      [](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return kHalf * sum(p.m, [&](const R& k) { return sq(p0(a1 - k)) / k - p1(k + r.d) / k; }) +
               inv(2 * r.d * r.d) * (B - A + M - O) + inv(2 * r.d) * (p1(a1) - p1(d1)) +
               make_rational(1, 4) * (R(2) * M * (p1(a1) - sq(B)) + R(2) * (A - B) * (p1(a1) - p1(d1)) -
                                      R(2) * O * p1(d1) - p2(d1) + R(2) * O * sq(A) + p2(a1));
      });

  add("psi0_psi0_reflect_over_k", "sum psi0(k) psi0(a+1-k)/k", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a;
        return sum(p.m, [&](const R& k) { return p0(k) * p0(a + 1 - k) / k; });
      },
      [one](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return kHalf * sum(p.m, [&](const R& k) {
                 return sq(p0(k + r.d)) / k + sq(p0(k)) / (k + r.d) - p1(k + r.d) / k + p1(k) / (k + r.d);
               }) +
               (inv(r.d) - A) * sum(p.m, [&](const R& k) { return p0(k + r.d) / k; }) +
               inv(r.d * r.d) * (B - A + M - O) -
               inv(2 * r.d) * (R(2) * A * (B + M - O) - sq(B) + p1(d1) - sq(A) - p1(a1)) +
               make_rational(1, 6) *
                   (R(3) * sq(A) * (M - B) -
                    R(3) * A * (R(2) * O * B - sq(B) + p1(d1) - p1(a1) + sq(O) + p1(one)) - cube(B) +
                    R(3) * O * sq(B) + R(3) * p1(a1) * M - R(3) * O * p1(d1) +
                    R(3) * B * (p1(d1) - p1(a1) + sq(M) + p1(r.mm + 1)) - p2(d1) + cube(A) + p2(a1));
      });

  add("psi0_psi0_reflect_over_mp1mk", "sum psi0(k) psi0(a+1-k)/(m+1-k)", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R a = *p.a, mm(p.m);
        return sum(p.m, [&](const R& k) { return p0(k) * p0(a + 1 - k) / (mm + 1 - k); });
      },
      [one](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return kHalf * sum(p.m, [&](const R& k) {
                 return sq(p0(a1 - k)) / k - sq(p0(k)) / (k + r.d) + p1(k + r.d) / k - p1(k) / (k + r.d);
               }) -
               (inv(r.d) - A) * sum(p.m, [&](const R& k) { return p0(k + r.d) / k; }) +
               inv(2 * r.d * r.d) * (R(3) * (A - B - M + O)) -
               inv(2 * r.d) * (sq(A) + R(2) * (O - R(2) * M) * A - sq(B) + R(2) * O * B + R(2) * (M - O) * M +
                               R(2) * p1(r.mm + 1) - R(2) * p1(one)) +
               make_rational(1, 12) *
                   (R(6) * B * ((-A + M - R(2) * O) * (M - A) + p1(r.mm + 1) - R(2) * p1(one)) - R(4) * cube(A) +
                    R(6) * O * sq(A) + R(6) * sq(M) * A + R(6) * p1(d1) * A - R(6) * M * (sq(A) + p1(d1)) +
                    R(6) * p1(r.mm + 1) * A - R(6) * A * p1(a1) - p2(a1) - R(2) * cube(B) + R(6) * O * p1(d1) +
                    p2(d1));
      });

  add("psi0_psi0_shift_over_mp1mk", "sum psi0(k) psi0(k+a-m)/(m+1-k)", {"a"}, a_greater_than_m(),
      [](const SumParams& p) {
        const R d = *p.a - p.m, mm(p.m);
        return sum(p.m, [&](const R& k) { return p0(k) * p0(k + d) / (mm + 1 - k); });
      },
      [one](const SumParams& p) {
        const Reflect r(p);
        const R a1 = r.a + 1, d1 = r.d + 1;
        const P &A = r.A, &B = r.B, &M = r.M, &O = r.O;
        return kHalf * sum(p.m, [&](const R& k) {
                 return sq(p0(a1 - k)) / k + sq(p0(k + r.d)) / k + sq(p0(k)) / (k + r.d) + p1(k) / (k + r.d);
               }) +
               inv(r.d) * sum(p.m, [&](const R& k) { return p0(k + r.d) / k; }) +
               inv(2 * r.d * r.d) * (B - A + M - O) + inv(2 * r.d) * (sq(B) - sq(A)) +
               make_rational(1, 12) *
                   (R(6) * sq(A) * (B + O) +
                    R(6) * A * (R(-2) * M * (B + O) + p1(d1) - p1(a1) + sq(M) + p1(r.mm + 1) - R(2) * p1(one)) -
                    R(2) * cube(B) + R(6) * O * sq(B) + R(6) * M * (p1(a1) - p1(d1)) +
                    R(6) * (sq(M) + p1(r.mm + 1)) * B + p2(d1) - R(4) * cube(A) - p2(a1));
      });

  add("psi0_psi0_shift_over_k", "sum psi0(k) psi0(k+b)/k", {"b"}, b_at_least(0, true),
      [](const SumParams& p) {
        const R b = *p.b;
        return sum(p.m, [&](const R& k) { return p0(k) * p0(k + b) / k; });
      },
      [one](const SumParams& p) {
        const R b = *p.b, mm(p.m);
        const P M = p0(mm + 1), O = p0(one);
        return -kHalf * sum(p.m, [&](const R& k) { return p1(k) / (k + b) + sq(p0(k)) / (k + b); }) -
               inv(b) * sum(p.m, [&](const R& k) { return p0(k + b) / k; }) +
               inv(b * b) * (p0(b + mm + 1) - p0(b + 1) - M + O) +
               inv(2 * b) * (R(2) * M * p0(b + mm + 1) - R(2) * O * p0(b + 1) - sq(M) - p1(mm + 1) + sq(O) +
                             p1(one)) +
               kHalf * ((sq(M) + p1(mm + 1)) * p0(b + mm + 1) - (sq(O) + p1(one)) * p0(b + 1));
      });

  add("psi0_psi0_shift_over_shift", "sum psi0(k) psi0(k+b)/(k+b)", {"b"}, b_at_least(0, true),
      [](const SumParams& p) {
        const R b = *p.b;
        return sum(p.m, [&](const R& k) { return p0(k) * p0(k + b) / (k + b); });
      },
      [one](const SumParams& p) {
        const R b = *p.b, mm(p.m);
        const P M = p0(mm + 1), O = p0(one);
        const P top = p0(b + mm + 1), bot = p0(b + 1);
        return -kHalf * sum(p.m, [&](const R& k) { return sq(p0(k + b)) / k + p1(k + b) / k; }) -
               inv(b) * sum(p.m, [&](const R& k) { return p0(k + b) / k; }) +
               inv(2 * b) * (sq(top) + p1(b + mm + 1) - sq(bot) - p1(b + 1)) +
               kHalf * (M * (sq(top) + p1(b + mm + 1)) - O * sq(bot) - O * p1(b + 1));
      });

  add("three_term", "sum psi0(k+b)psi0(k+c)/(k+a) + psi0(k+a)psi0(k+c)/(k+b) + psi0(k+a)psi0(k+b)/(k+c)",
      {"a", "b", "c"}, distinct_positive_integers(),
      [](const SumParams& p) {
        const R a = *p.a, b = *p.b, c = *p.c;
        return sum(p.m, [&](const R& k) {
          return p0(k + b) * p0(k + c) / (k + a) + p0(k + a) * p0(k + c) / (k + b) + p0(k + a) * p0(k + b) / (k + c);
        });
      },
      [](const SumParams& p) {
        const R a = *p.a, b = *p.b, c = *p.c, m(p.m);
        const int mi = p.m;
        auto s = [&](const R& u, const R& v) { return sum(mi, [&](const R& k) { return p0(k + u) / (k + v); }); };
        const P Pa = p0(a), Pb = p0(b), Pc = p0(c), Pam = p0(a + m), Pbm = p0(b + m), Pcm = p0(c + m);
        P rhs = (inv(b - a) + Pa) * s(c, b) + (inv(c - a) + Pa) * s(b, c) + (inv(a - b) + Pb) * s(c, a) +
                (inv(c - b) + Pb) * s(a, c) + (inv(a - c) + Pcm) * s(b, a) + (inv(b - c) + Pcm) * s(a, b);
        rhs += (inv(c - b) - inv(c + m)) * Pa * Pbm + (inv(c - a) - inv(c + m)) * Pam * Pb;
        rhs += Pa * Pb * Pcm - Pa * Pbm * Pcm + Pa * Pb * Pc - Pb * Pam * Pcm +
               R((a + m) * (a - b - c - m)) * inv((a - b) * (a - c) * (b + m) * (c + m)) * Pam;
        rhs += inv(b - a) * Pam * Pcm + R((b + m) * (a - b + c + m)) * inv((a - b) * (a + m) * (b - c) * (c + m)) * Pbm;
        rhs += inv(a - b) * Pbm * Pcm + R((c + m) * (a + b - c + m)) * inv((a - c) * (a + m) * (c - b) * (b + m)) * Pcm;
        rhs += inv(c + m) * Pam * Pbm + (inv(a - c) + inv(b - c) + inv(c)) * Pa * Pb;
        rhs += (inv(b - a) + inv(a - c) - inv(a + m) + inv(a)) * Pb * Pcm + inv(c - b) * Pa * Pc;
        rhs += (inv(a - b) + inv(b - c) - inv(b + m) + inv(b)) * Pa * Pcm + inv(c - a) * Pb * Pc;
        rhs += R(a * (-a + b + c)) * inv(b * c * (a - b) * (a - c)) * Pa -
               R(b * (a - b + c)) * inv(a * c * (a - b) * (b - c)) * Pb +
               R(c * (a + b - c)) * inv(a * b * (a - c) * (b - c)) * Pc;
        return rhs;
      });

  add("psi0_difference_closed_form", "sum (1/(k+a) + 1/(k+b)) (psi0(k+a+b+m) - psi0(k+a+b))", {"a", "b"},
      a_b_positive(),
      [](const SumParams& p) {
        const R a = *p.a, b = *p.b, m(p.m);
        return sum(p.m, [&](const R& k) { return (inv(k + a) + inv(k + b)) * (p0(k + a + b + m) - p0(k + a + b)); });
      },
      [](const SumParams& p) {
        const R a = *p.a, b = *p.b, m(p.m);
        return R(m * inv(a * (a + m))) * (p0(b + m + 1) - p0(b + 1)) +
               R(m * inv(b * (b + m))) * (p0(a + m + 1) - p0(a + 1)) - p0(b + 1) * p0(a + m + 1) -
               p0(a + 1) * p0(b + m + 1) + p0(a + m + 1) * p0(b + m + 1) -
               (inv(a + m) + inv(a) + inv(b + m) + inv(b)) * p0(a + b + m + 1) +
               R((a + b + 2 * m) * inv((a + m) * (b + m))) * p0(a + b + 2 * m + 1) + p0(a + 1) * p0(b + 1) +
               (inv(a) + inv(b)) * p0(a + b + 1);
      });

  add("trigamma_closed_form_shift",
      "sum (psi1(k+2alpha+m) - psi1(k+2alpha))/k - psi1(k+2alpha)/(k+2alpha+m) + psi1(k+2alpha+m)/(k+2alpha)",
      {"alpha"}, alpha_positive(),
      [](const SumParams& p) {
        const R t = 2 * *p.alpha, m(p.m);
        return sum(p.m, [&](const R& k) {
          return (p1(k + t + m) - p1(k + t)) / k - p1(k + t) / (k + t + m) + p1(k + t + m) / (k + t);
        });
      },
      [one](const SumParams& p) {
        const R al = *p.alpha, t = 2 * al, m(p.m);
        const P O = p0(one), M = p0(m + 1);
        const P T1 = p0(t + 1), Tm = p0(t + m + 1), T2m = p0(t + 2 * m + 1);
        const P S1 = p1(t + 1), Sm = p1(t + m + 1);
        P rhs = O * S1 + inv(t) * S1 - T1 * S1 + kHalf * p2(t + 1);
        rhs += -R((4 * al * al + m * m + 6 * al * m) * inv(2 * al * m * m + 4 * al * al * m)) * Sm -
               (inv(m * m) + inv((t + m) * (t + m))) * T2m;
        rhs += inv(4 * al * al * m * m * (t + m) * (t + m)) *
               (R(8 * al * al * m * (2 * al * al + m * m + 3 * al * m)) * p1(t + 2 * m + 1) -
                R((4 * al * al + m * m) * (t + m) * (t + m)) * T1 +
                R(32 * al * al * al * al + m * m * m * m + 4 * al * m * m * m + 16 * al * al * m * m +
                  32 * al * al * al * m) *
                    Tm);
        rhs += (inv(4 * al * al) - inv((t + m) * (t + m))) * (O - M) - O * Sm - S1 * M - kHalf * p2(t + m + 1);
        rhs += M * Sm + Tm * Sm - T2m * Sm + S1 * Tm;
        return rhs;
      });

  add("trigamma_closed_form_mixed",
      "sum psi1(k)/(2alpha+k) - psi1(2alpha+k)/(2alpha+k) - psi1(k)/(2alpha+k+m) + psi1(2alpha+k)/(2alpha+k+m)",
      {"alpha"}, alpha_positive(),
      [](const SumParams& p) {
        const R t = 2 * *p.alpha, m(p.m);
        return sum(p.m, [&](const R& k) {
          return p1(k) / (t + k) - p1(t + k) / (t + k) - p1(k) / (t + k + m) + p1(t + k) / (t + k + m);
        });
      },
      [one](const SumParams& p) {
        const R t = 2 * *p.alpha, m(p.m);
        const P O = p0(one), M = p0(m + 1);
        const P T1 = p0(t + 1), Tm = p0(t + m + 1), T2m = p0(t + 2 * m + 1);
        const P S1 = p1(t + 1), Sm = p1(t + m + 1), Q = p1(m + 1);
        return -O * S1 - Q * (T1 - R(2) * Tm) - Q * T2m + O * Sm - M * Sm - Tm * Sm + T2m * Sm + S1 * M +
               S1 * (T1 - Tm);
      });

  return cat;
}

}  // namespace

const std::vector<IdentityDefinition>& identity_catalog() {
  static const std::vector<IdentityDefinition> catalog = build_catalog();
  return catalog;
}

const IdentityDefinition& find_identity(std::string_view id) {
  for (const auto& def : identity_catalog())
    if (def.id == id) return def;
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

ConstantPolynomial identity_residual(const IdentityCase& c) {
  const IdentityDefinition& def = find_identity(c.identity_id);
  if (auto reason = def.domain(c.params))
    throw DomainError(def.id + ": inadmissible parameters: " + *reason);
  return def.lhs(c.params) - def.rhs(c.params);
}

std::vector<GridCase> identity_grid(int max_m) {
  if (max_m < 1) throw DomainError("max_m must be positive");
  std::vector<GridCase> grid;
  auto push = [&](const std::string& id, SumParams p, std::optional<std::string> skip = std::nullopt) {
    grid.push_back(GridCase{IdentityCase{id, std::move(p)}, std::move(skip)});
  };
  // Integer values 0..6 and half-integers 1/2..11/2 for b and c.
  std::vector<R> bc_values;
  for (int v = 0; v <= 6; ++v) bc_values.emplace_back(v);
  for (int v = 0; v <= 5; ++v) bc_values.push_back(make_rational(2 * v + 1, 2));
  std::vector<R> alphas;
  for (int t = 1; t <= 7; t += 2) alphas.push_back(make_rational(t, 2));

  for (const auto& def : identity_catalog()) {
    const auto& ps = def.params;
    const bool a_only = ps == std::vector<std::string>{"a"};
    for (int m = 1; m <= max_m; ++m) {
      SumParams base;
      base.m = m;
      if (ps.empty()) {
        push(def.id, base);
      } else if (a_only) {
        for (int off = 1; off <= 6; ++off) {
          SumParams p = base;
          p.a = R(m + off);
          push(def.id, p);
        }
        // a = alpha + m exercises the half-integer sector.
        for (const R& al : alphas) {
          SumParams p = base;
          p.a = al + m;
          push(def.id, p);
        }
        if (def.id == "reflect_shift_a_over_k" || def.id == "psi0k_over_reflect_a") {
          SumParams p = base;
          p.a = R(m);
          push(def.id, p, "a = m puts psi0 at the pole a - m = 0");
        }
      } else if (ps == std::vector<std::string>{"b"}) {
        for (const R& b : bc_values) {
          SumParams p = base;
          p.b = b;
          if (def.domain(p)) continue;
          push(def.id, p);
        }
      } else if (ps == std::vector<std::string>{"b", "c"}) {
        for (const R& b : bc_values)
          for (const R& c : bc_values) {
            if (b == c) continue;
            SumParams p = base;
            p.b = b;
            p.c = c;
            push(def.id, p);
          }
      } else if (ps == std::vector<std::string>{"a", "b", "c"}) {
        for (int a = 1; a <= 6; ++a)
          for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c) {
              if (a == b || a == c || b == c) continue;
              SumParams p = base;
              p.a = R(a);
              p.b = R(b);
              p.c = R(c);
              push(def.id, p);
            }
      } else if (ps == std::vector<std::string>{"a", "b"}) {
        for (int a = 1; a <= 6; ++a)
          for (int b = 1; b <= 6; ++b) {
            SumParams p = base;
            p.a = R(a);
            p.b = R(b);
            push(def.id, p);
          }
        for (const R& al : alphas) {
          SumParams p = base;
          p.a = al + m;
          p.b = al;
          push(def.id, p);
        }
      } else if (ps == std::vector<std::string>{"alpha"}) {
        for (const R& al : alphas) {
          SumParams p = base;
          p.alpha = al;
          push(def.id, p);
        }
        SumParams p = base;
        p.alpha = make_rational(-1, 2);
        push(def.id, p, "alpha = -1/2 puts psi at the pole k + 2alpha = 0");
      }
    }
  }
  return grid;
}

IdentityReport run_identity_cases(const std::vector<GridCase>& cases, unsigned threads) {
  IdentityReport report;
  report.outcomes.resize(cases.size());
  auto evaluate = [&](std::size_t i) {
    const GridCase& g = cases[i];
    CaseOutcome& out = report.outcomes[i];
    out.identity = g.identity;
    if (g.skip_reason) {
      out.status = CaseStatus::Skipped;
      out.skip_reason = *g.skip_reason;
      return;
    }
    try {
      P residual = identity_residual(g.identity);
      out.status = residual.is_zero() ? CaseStatus::Pass : CaseStatus::Fail;
      if (!residual.is_zero()) out.residual_text = residual.to_string();
    } catch (const std::exception& e) {
      out.status = CaseStatus::Error;
      out.residual_text = e.what();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) evaluate(i);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& o : report.outcomes) {
    switch (o.status) {
      case CaseStatus::Pass: ++report.passed; break;
      case CaseStatus::Fail: ++report.failed; break;
      case CaseStatus::Skipped: ++report.skipped; break;
      case CaseStatus::Error: ++report.errors; break;
    }
  }
  return report;
}

// ---- re-summation fixtures -------------------------------------------------

namespace {

struct Fixture {
  FixtureDefinition def;
  // G(i) for the fixed b.
  std::function<P(int i, const R& b)> g;
  // Closed-form G(i) - G(i-1).
  std::function<P(int i, const R& b)> delta;
};

// sum_{k=1}^{i-1} f(k)
template <typename F>
P inner(int i, F f) {
  return sum(i - 1, f);
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> fx;
  const R one(1);
  auto add = [&](std::string id, std::string serves, std::string text, std::function<P(int, const R&)> g,
                 std::function<P(int, const R&)> delta) {
    fx.push_back(Fixture{FixtureDefinition{std::move(id), std::move(serves), std::move(text)}, std::move(g),
                         std::move(delta)});
  };

  add("psi0_b_reflect_over_k", "reflect_shift_a_over_k", "sum psi0(b+m+1-k)/k",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p0(b + i + 1 - k) / k; }); },
      [](int i, const R& b) {
        const R ii(i);
        return p0(b + 1) / ii + inner(i, [&](const R& k) { return P(inv(k * (b + ii - k))); });
      });

  add("psi0_reflect_over_shift", "psi0k_over_reflect_a", "sum psi0(m+1-k)/(k+b)",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p0(R(i + 1) - k) / (k + b); }); },
      [one](int i, const R& b) {
        const R ii(i);
        return p0(one) / (ii + b) + inner(i, [&](const R& k) { return P(inv((ii - k) * (k + b))); });
      });

  add("psi0_reflect_over_shift_sq", "psi0_over_reflect_a_sq", "sum psi0(m+1-k)/(k+b)^2",
      [](int i, const R& b) {
        return sum(i, [&](const R& k) { return p0(R(i + 1) - k) / ((k + b) * (k + b)); });
      },
      [one](int i, const R& b) {
        const R ii(i);
        return p0(one) / ((ii + b) * (ii + b)) +
               inner(i, [&](const R& k) { return P(inv((ii - k) * (k + b) * (k + b))); });
      });

  add("psi0sq_reflect_over_shift", "psi0sq_over_reflect_a", "sum psi0^2(m+1-k)/(k+b)",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return sq(p0(R(i + 1) - k)) / (k + b); }); },
      [one](int i, const R& b) {
        const R ii(i);
        return sq(p0(one)) / (ii + b) + inner(i, [&](const R& k) {
                 return (R(2) * p0(ii - k) + P(inv(ii - k))) / ((ii - k) * (k + b));
               });
      });

  add("psi1_b_reflect_over_k", "psi1_reflect_a_over_k", "sum psi1(b+m+1-k)/k",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p1(b + i + 1 - k) / k; }); },
      [](int i, const R& b) {
        const R ii(i);
        return p1(b + 1) / ii - inner(i, [&](const R& k) { return P(inv(k * (b + ii - k) * (b + ii - k))); });
      });

  add("psi1_reflect_over_shift", "psi1_over_reflect_a", "sum psi1(m+1-k)/(k+b)",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p1(R(i + 1) - k) / (k + b); }); },
      [one](int i, const R& b) {
        const R ii(i);
        return p1(one) / (ii + b) - inner(i, [&](const R& k) { return P(inv((ii - k) * (ii - k) * (k + b))); });
      });

  add("psi0_b_reflect_over_k2", "psi0_reflect_a_over_k2", "sum psi0(b+m+1-k)/k^2",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p0(b + i + 1 - k) / (k * k); }); },
      [](int i, const R& b) {
        const R ii(i);
        return p0(b + 1) / (ii * ii) + inner(i, [&](const R& k) { return P(inv(k * k * (b + ii - k))); });
      });

  add("psi0_reflect_psi0_shift_over_shift", "psi0_psi0_reflect_over_reflect_a",
      "sum psi0(m+1-k) psi0(k+b)/(k+b)",
      [](int i, const R& b) {
        return sum(i, [&](const R& k) { return p0(R(i + 1) - k) * p0(k + b) / (k + b); });
      },
      [one](int i, const R& b) {
        const R ii(i);
        return p0(one) * p0(ii + b) / (ii + b) +
               inner(i, [&](const R& k) { return p0(k + b) / ((ii - k) * (k + b)); });
      });

  add("psi0_psi0_b_reflect_over_k", "psi0_psi0_reflect_over_k", "sum psi0(k) psi0(b+m+1-k)/k",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p0(k) * p0(b + i + 1 - k) / k; }); },
      [](int i, const R& b) {
        const R ii(i);
        return p0(ii) * p0(b + 1) / ii + inner(i, [&](const R& k) { return p0(k) / (k * (ii + b - k)); });
      });

  add("psi0_reflect_psi0_shift_over_k", "psi0_psi0_reflect_over_mp1mk", "sum psi0(m+1-k) psi0(k+b)/k",
      [](int i, const R& b) { return sum(i, [&](const R& k) { return p0(R(i + 1) - k) * p0(k + b) / k; }); },
      [one](int i, const R& b) {
        const R ii(i);
        return p0(one) * p0(ii + b) / ii + inner(i, [&](const R& k) { return p0(k + b) / ((ii - k) * k); });
      });

  add("psi0_psi0_shift_over_reflect", "psi0_psi0_shift_over_mp1mk", "sum psi0(k) psi0(k+b)/(m+1-k)",
      [](int i, const R& b) {
        return sum(i, [&](const R& k) { return p0(k) * p0(k + b) / (R(i + 1) - k); });
      },
      [one](int i, const R& b) {
        const R ii(i);
        return p0(one) * p0(b + 1) / ii + inner(i, [&](const R& k) {
                 return (p0(k) / (k + b) + p0(k + b) / k + P(inv(k * (k + b)))) / (ii - k);
               });
      });

  return fx;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> fx = build_fixtures();
  return fx;
}

}  // namespace

const std::vector<FixtureDefinition>& resummation_fixtures() {
  static const std::vector<FixtureDefinition> defs = [] {
    std::vector<FixtureDefinition> d;
    for (const auto& f : fixtures()) d.push_back(f.def);
    return d;
  }();
  return defs;
}

ConstantPolynomial resummation_telescope_check(std::string_view fixture_id, const SumParams& params) {
  const Fixture* fx = nullptr;
  for (const auto& f : fixtures())
    if (f.def.id == fixture_id) fx = &f;
  if (!fx) throw std::invalid_argument("unknown re-summation fixture '" + std::string(fixture_id) + "'");
  if (params.m < 1) throw DomainError("m must be positive");
  if (auto e = require_half(params.b, "b")) throw DomainError(*e);
  if (*params.b <= 0) throw DomainError("re-summation fixtures require b > 0");
  const R& b = *params.b;
  P telescoped;
  for (int i = 1; i <= params.m; ++i) telescoped += fx->delta(i, b);
  return fx->g(params.m, b) - telescoped;
}

}  // namespace bures
