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

#include "bures/constant_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bures {

namespace {

constexpr std::array<Symbol, kSymbolCount> kPrintOrder = {Symbol::EulerGamma, Symbol::Ln2, Symbol::Zeta2,
                                                          Symbol::Zeta3};
// Tie-break priority inside a degree: z3 first, then z2, l2, g.
constexpr std::array<Symbol, kSymbolCount> kOrderPriority = {Symbol::Zeta3, Symbol::Zeta2, Symbol::Ln2,
                                                             Symbol::EulerGamma};

Symbol parse_symbol(std::string_view name) {
  for (Symbol s : kPrintOrder)
    if (symbol_name(s) == name) return s;
  throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
}

// "12", "-3/4" -> rational; returns false if the token is not numeric.
bool parse_number(std::string_view tok, BigRational& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  for (std::size_t j = i; j < tok.size(); ++j) {
    char c = tok[j];
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
      throw std::invalid_argument("malformed number '" + std::string(tok) + "'");
  }
  std::string s(tok[0] == '+' ? tok.substr(1) : tok);
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    out = BigRational(BigInteger(s));
  } else {
    if (s.find('/', slash + 1) != std::string::npos || slash + 1 == s.size())
      throw std::invalid_argument("malformed number '" + s + "'");
    out = make_rational(BigInteger(s.substr(0, slash)), BigInteger(s.substr(slash + 1)));
  }
  return true;
}

}  // namespace

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::EulerGamma: return "g";
    case Symbol::Ln2: return "l2";
    case Symbol::Zeta2: return "z2";
    case Symbol::Zeta3: return "z3";
  }
  return "?";
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kSymbolCount; ++i) r.exponents[i] = a.exponents[i] + b.exponents[i];
  return r;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (Symbol s : kOrderPriority)
    if (a[s] != b[s]) return a[s] > b[s];
  return false;
}

ConstantPolynomial::ConstantPolynomial(const BigRational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

ConstantPolynomial ConstantPolynomial::symbol(Symbol s) {
  Monomial m;
  m[s] = 1;
  return term(BigRational(1), m);
}

ConstantPolynomial ConstantPolynomial::term(const BigRational& coeff, const Monomial& mono) {
  ConstantPolynomial p;
  p.add_term(mono, coeff);
  return p;
}

unsigned ConstantPolynomial::degree() const {
  // Graded order puts the highest degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

BigRational ConstantPolynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void ConstantPolynomial::add_term(const Monomial& mono, const BigRational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ConstantPolynomial& ConstantPolynomial::operator+=(const ConstantPolynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
  return *this;
}

ConstantPolynomial& ConstantPolynomial::operator-=(const ConstantPolynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
  return *this;
}

ConstantPolynomial& ConstantPolynomial::operator*=(const ConstantPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

ConstantPolynomial& ConstantPolynomial::operator*=(const BigRational& rhs) {
  if (rhs == 0) {
    terms_.clear();
  } else {
    for (auto& [mono, coeff] : terms_) coeff *= rhs;
  }
  return *this;
}

ConstantPolynomial ConstantPolynomial::operator-() const {
  ConstantPolynomial r(*this);
  for (auto& [mono, coeff] : r.terms_) coeff = -coeff;
  return r;
}

ConstantPolynomial operator*(const ConstantPolynomial& a, const ConstantPolynomial& b) {
  ConstantPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

ConstantPolynomial operator/(ConstantPolynomial a, const BigRational& b) {
  if (b == 0) throw DomainError("polynomial divided by zero");
  for (auto& [mono, coeff] : a.terms_) coeff /= b;
  return a;
}

std::string ConstantPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    BigRational mag = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (Symbol s : kPrintOrder) {
      auto e = mono[s];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += symbol_name(s);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

ConstantPolynomial ConstantPolynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  // Split into signed terms at '+'/'-' that do not follow '^', '*' or '/'.
  std::vector<std::pair<bool, std::string>> terms;
  bool negative = false;
  std::string current;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool is_sign = (c == '+' || c == '-');
    bool at_term_start = current.empty();
    if (is_sign && !at_term_start) {
      terms.emplace_back(negative, current);
      current.clear();
      negative = (c == '-');
    } else if (is_sign && at_term_start) {
      if (i > 0 && !terms.empty() && current.empty() && (s[i - 1] == '+' || s[i - 1] == '-'))
        throw std::invalid_argument("repeated sign in polynomial text");
      negative = (c == '-') != negative;
    } else {
      current += c;
    }
  }
  if (current.empty()) throw std::invalid_argument("dangling sign in polynomial text");
  terms.emplace_back(negative, current);

  ConstantPolynomial result;
  for (const auto& [neg, body] : terms) {
    BigRational coeff(1);
    Monomial mono;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t star = body.find('*', start);
      std::string_view factor(body.data() + start, (star == std::string::npos ? body.size() : star) - start);
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + body + "'");
      BigRational num;
      if (parse_number(factor, num)) {
        coeff *= num;
      } else {
        std::size_t caret = factor.find('^');
        Symbol sym = parse_symbol(factor.substr(0, caret));
        long e = 1;
        if (caret != std::string_view::npos) {
          std::string es(factor.substr(caret + 1));
          if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed exponent in '" + std::string(factor) + "'");
          e = std::stol(es);
        }
        mono[sym] = static_cast<std::uint16_t>(mono[sym] + e);
      }
      if (star == std::string::npos) break;
      start = star + 1;
    }
    result.add_term(mono, neg ? BigRational(-coeff) : coeff);
  }
  return result;
}

ConstantPolynomial poly_combine(const ConstantPolynomial& a, const ConstantPolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

namespace {

BigFloat constant_value(Symbol s, unsigned digits) {
  switch (s) {
    case Symbol::EulerGamma: return BigFloat::euler_gamma(digits);
    case Symbol::Ln2: return BigFloat::ln2(digits);
    case Symbol::Zeta2: {
      BigFloat p = BigFloat::pi(digits);
      return p * p / BigFloat(BigRational(6), digits);
    }
    case Symbol::Zeta3: return BigFloat::zeta(3, digits);
  }
  throw std::invalid_argument("unknown symbol");
}

}  // namespace

BigFloat poly_eval(const ConstantPolynomial& a, unsigned digits) {
  if (digits < 15) throw std::invalid_argument("poly_eval needs at least 15 digits");
  unsigned working = digits + 10;
  constexpr unsigned kMaxWorking = 20000;
  for (;;) {
    std::array<BigFloat, kSymbolCount> values{BigFloat(working), BigFloat(working), BigFloat(working),
                                              BigFloat(working)};
    for (std::size_t i = 0; i < kSymbolCount; ++i) values[i] = constant_value(static_cast<Symbol>(i), working);

    BigFloat sum(working), magnitude(working);
    for (const auto& [mono, coeff] : a.terms()) {
      BigFloat t(coeff, working);
      for (std::size_t i = 0; i < kSymbolCount; ++i)
        for (unsigned e = 0; e < mono.exponents[i]; ++e) t *= values[i];
      sum += t;
      magnitude += abs(t);
    }
    if (a.is_zero()) return sum;
    // Decimal digits lost to cancellation between terms.
    double lost = 0.0;
    if (sum.is_zero()) {
      lost = working;
    } else {
      lost = std::max(0.0, (magnitude.exponent() - sum.exponent() + 1) * 0.30103);
    }
    if (lost + digits + 3 <= working || working >= kMaxWorking) return sum;
    working = std::min(kMaxWorking, static_cast<unsigned>(digits + lost + 15));
  }
}

double poly_eval_double(const ConstantPolynomial& a) { return poly_eval(a, 30).to_double(); }

}  // namespace bures
