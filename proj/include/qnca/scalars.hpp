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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace qnca {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& x);

/// A pure power v^vexp of v = q^{1/2}. All commutation constants of a
/// presentation live in this group.
struct QPower {
  int vexp = 0;

  static QPower q(int qexp) { return QPower{2 * qexp}; }

  QPower inverse() const { return QPower{-vexp}; }
  QPower pow(int n) const { return QPower{vexp * n}; }
  bool is_one() const { return vexp == 0; }

  friend QPower operator*(QPower a, QPower b) { return QPower{a.vexp + b.vexp}; }
  friend bool operator==(QPower a, QPower b) = default;
  friend auto operator<=>(QPower a, QPower b) = default;
};

/// How to print the variable of a Laurent scalar.
enum class ScalarStyle {
  kV,         // always in v
  kQIfEven,  // in q = v^2 when every exponent is even
};

/// Exact element of Q[v, v^-1]. Zero coefficients are never stored.
class LaurentScalar {
 public:
  using Terms = std::map<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentScalar(const Rational& c);
  LaurentScalar(QPower p);  // NOLINT(google-explicit-constructor)

  static LaurentScalar monomial(const Rational& c, int vexp);
  /// Builds from an arbitrary coefficient map and drops zeros.
  static LaurentScalar from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  /// The (coefficient, exponent) pair when there is exactly one term.
  std::optional<std::pair<Rational, int>> as_monomial() const;
  /// The exponent when the scalar equals v^e exactly.
  std::optional<int> as_qpower() const;
  /// Rational value when the scalar is a constant.
  std::optional<Rational> as_rational() const;

  int min_exponent() const;
  int max_exponent() const;

  LaurentScalar shifted(int vexp) const;
  /// Substitutes v = 1.
  Rational eval_at_one() const;
  /// Derivative with respect to v evaluated at v = 1.
  Rational derivative_at_one() const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  LaurentScalar& operator*=(QPower p);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator*(LaurentScalar a, QPower p) { return a *= p; }
  friend LaurentScalar operator*(QPower p, LaurentScalar a) { return a *= p; }
  LaurentScalar operator-() const;

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string(ScalarStyle style = ScalarStyle::kV) const;

 private:
  Terms terms_;
};

inline bool is_zero(const LaurentScalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Divides by a unit (c*v^e) exactly. Throws MathError if `d` is not a unit.
LaurentScalar divide_by_unit(const LaurentScalar& a, const LaurentScalar& d);

/// Parses "3/2*v^-4 + v^2", "q - q^-1", "(1 + q)*(v^3)" and similar.
LaurentScalar parse_scalar(const std::string& text);

}  // namespace qnca
