// Copyright 2026 The qnca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnca/scalars.hpp"

#include <sstream>

#include "qnca/error.hpp"
#include "qnca/polytext.hpp"

namespace qnca {

std::string to_string(const Rational& x) { return x.get_str(); }

LaurentScalar::LaurentScalar(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

LaurentScalar::LaurentScalar(const Rational& c) {
  if (sgn(c) != 0) {
    Rational r = c;
    r.canonicalize();
    terms_.emplace(0, std::move(r));
  }
}

LaurentScalar::LaurentScalar(QPower p) { terms_.emplace(p.vexp, Rational(1)); }

LaurentScalar LaurentScalar::monomial(const Rational& c, int vexp) {
  LaurentScalar s;
  if (sgn(c) != 0) {
    Rational r = c;
    r.canonicalize();
    s.terms_.emplace(vexp, std::move(r));
  }
  return s;
}

LaurentScalar LaurentScalar::from_terms(Terms terms) {
  LaurentScalar s;
  for (auto& [e, c] : terms) {
    c.canonicalize();
    if (sgn(c) != 0) s.terms_.emplace(e, std::move(c));
  }
  return s;
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::optional<std::pair<Rational, int>> LaurentScalar::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

std::optional<int> LaurentScalar::as_qpower() const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Rational> LaurentScalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

int LaurentScalar::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentScalar::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentScalar LaurentScalar::shifted(int vexp) const {
  LaurentScalar s;
  for (const auto& [e, c] : terms_) s.terms_.emplace_hint(s.terms_.end(), e + vexp, c);
  return s;
}

Rational LaurentScalar::eval_at_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Rational LaurentScalar::derivative_at_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * e;
  return sum;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Rational prod = ca * cb;
      auto [it, inserted] = out.emplace(ea + eb, prod);
      if (!inserted) it->second += prod;
    }
  }
  return LaurentScalar::from_terms(std::move(out));
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar& LaurentScalar::operator*=(QPower p) {
  if (p.vexp != 0) *this = shifted(p.vexp);
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar s;
  for (const auto& [e, c] : terms_) s.terms_.emplace_hint(s.terms_.end(), e, -c);
  return s;
}

namespace {

std::string render_term(const Rational& c, int e, bool use_q) {
  const char* var = use_q ? "q" : "v";
  const int shown = use_q ? e / 2 : e;
  if (shown == 0) return to_string(c);
  std::string power = shown == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(shown);
  if (c == 1) return power;
  if (c == -1) return "-" + power;
  return to_string(c) + "*" + power;
}

}  // namespace

std::string LaurentScalar::to_string(ScalarStyle style) const {
  if (terms_.empty()) return "0";
  bool use_q = style == ScalarStyle::kQIfEven;
  if (use_q) {
    for (const auto& [e, c] : terms_) {
      if (e % 2 != 0) use_q = false;
    }
  }
  std::string out;
  bool first = true;
  // highest power first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      out = render_term(c, e, use_q);
      first = false;
    } else if (sgn(c) < 0) {
      out += " - " + render_term(-c, e, use_q);
    } else {
      out += " + " + render_term(c, e, use_q);
    }
  }
  return out;
}

LaurentScalar divide_by_unit(const LaurentScalar& a, const LaurentScalar& d) {
  auto mono = d.as_monomial();
  if (!mono) throw MathError("division by a non-unit Laurent scalar: " + d.to_string());
  LaurentScalar out = a.shifted(-mono->second);
  Rational inv = 1 / mono->first;
  LaurentScalar::Terms t;
  for (const auto& [e, c] : out.terms()) t.emplace(e, c * inv);
  return LaurentScalar::from_terms(std::move(t));
}

LaurentScalar parse_scalar(const std::string& text) {
  const ParsedSum sum = parse_expression(text, {});
  LaurentScalar out;
  for (const auto& term : sum) {
    if (!term.word.empty()) throw ParseError("scalar expression contains a generator: " + text);
    out += term.coeff;
  }
  return out;
}

}  // namespace qnca
