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

#include <string>
#include <vector>

#include "qnca/scalars.hpp"

namespace qnca {

/// Dense univariate polynomial over Q in v, coefficients low to high,
/// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }

  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of the field Q(v), kept as num/den with den monic and
/// gcd(num, den) = 1. Used only inside exact linear solves.
class RatFunc {
 public:
  RatFunc() : den_(UPoly::constant(1)) {}
  RatFunc(long c);  // NOLINT(google-explicit-constructor)
  static RatFunc from_laurent(const LaurentScalar& s);
  static RatFunc from_parts(UPoly num, UPoly den);

  bool is_zero() const { return num_.is_zero(); }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  /// Returns true and fills `out` when the value lies in Q[v, v^-1].
  bool to_laurent(LaurentScalar& out) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace qnca
