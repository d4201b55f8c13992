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

#include "qnca/ratfunc.hpp"

#include <algorithm>

#include "qnca/error.hpp"

namespace qnca {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * inv;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  r = a;
  if (a.degree() < b.degree()) {
    q = UPoly();
    return;
  }
  std::vector<Rational> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational inv = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rational f = r.lead() * inv;
    qc[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
    }
    r.trim();
  }
  q = UPoly(std::move(qc));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFunc::RatFunc(long c) : num_(UPoly::constant(c)), den_(UPoly::constant(1)) {}

RatFunc RatFunc::from_parts(UPoly num, UPoly den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  RatFunc out;
  if (num.is_zero()) return out;
  UPoly g = UPoly::gcd(num, den);
  if (g.degree() > 0) {
    UPoly q, r;
    UPoly::divmod(num, g, q, r);
    num = q;
    UPoly::divmod(den, g, q, r);
    den = q;
  }
  const Rational lead = den.lead();
  if (lead != 1) {
    const UPoly scale = UPoly::constant(1 / lead);
    num = num * scale;
    den = den * scale;
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RatFunc RatFunc::from_laurent(const LaurentScalar& s) {
  RatFunc out;
  if (s.is_zero()) return out;
  const int lo = s.min_exponent();
  const int shift = lo < 0 ? -lo : 0;
  std::vector<Rational> v(static_cast<std::size_t>(s.max_exponent() + shift) + 1, Rational(0));
  for (const auto& [e, c] : s.terms()) v[static_cast<std::size_t>(e + shift)] = c;
  out.num_ = UPoly(std::move(v));
  out.den_ = UPoly::monomial(1, shift);
  // v^shift and a numerator with nonzero constant term are coprime.
  return out;
}

bool RatFunc::to_laurent(LaurentScalar& out) const {
  // den is monic; it is a unit of Q[v, v^-1] only when it equals v^d.
  const auto& dc = den_.coeffs();
  for (std::size_t i = 0; i + 1 < dc.size(); ++i) {
    if (sgn(dc[i]) != 0) return false;
  }
  const int d = den_.degree();
  LaurentScalar::Terms t;
  const auto& nc = num_.coeffs();
  for (std::size_t i = 0; i < nc.size(); ++i) {
    if (sgn(nc[i]) != 0) t.emplace(static_cast<int>(i) - d, nc[i]);
  }
  out = LaurentScalar::from_terms(std::move(t));
  return true;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::from_parts(a.num_ + b.num_, a.den_);
  return RatFunc::from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc::from_parts(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw MathError("rational function division by zero");
  if (a.is_zero()) return RatFunc();
  return RatFunc::from_parts(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace qnca
