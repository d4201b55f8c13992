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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "qnca/scalars.hpp"

namespace qnca {

/// Exponent (or lattice) vector. Length is the number of generators.
using Exponent = std::vector<int>;

/// Right-to-left lexicographic order: compare at the largest index where the
/// vectors differ. PBW leading terms and torus leading vectors use it.
struct RevLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : e) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline Exponent unit_vector(int n, int k) {
  Exponent e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return e;
}

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline Exponent operator+(Exponent a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Exponent operator-(Exponent a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Exponent operator-(Exponent a) {
  for (int& x : a) x = -x;
  return a;
}

/// Finite linear combination of exponent vectors with coefficients in
/// `Coeff`, canonical (no zero coefficient stored). `Tag` keeps the PBW
/// algebra, the quantum torus and the commutative ring apart as types.
template <class Coeff, class Tag>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Coeff, RevLex>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Coeff& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static SparsePoly monomial(const Exponent& e, const Coeff& c = Coeff(1)) {
    SparsePoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }
  static SparsePoly generator(int nvars, int k) { return monomial(unit_vector(nvars, k)); }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Coeff& c) {
    if (qnca::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (qnca::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// Largest term in RevLex order. Precondition: nonzero.
  const std::pair<const Exponent, Coeff>& leading() const { return *terms_.rbegin(); }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  template <class Scalar>
  SparsePoly scaled(const Scalar& s) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Coeff prod = c * s;
      if (!qnca::is_zero(prod)) out.terms_.emplace_hint(out.terms_.end(), e, std::move(prod));
    }
    return out;
  }

  SparsePoly shifted(const Exponent& by) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt_size(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    adopt_size(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  void adopt_size(const SparsePoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
  }

  int nvars_ = 0;
  Terms terms_;
};

struct NCTag;
struct TorusTag;
struct CommTag;

/// Element of a CGL algebra in PBW normal form x_1^{a_1} ... x_N^{a_N}.
using NCPoly = SparsePoly<LaurentScalar, NCTag>;
/// Element of a based quantum torus, sum of c_f M(f) with f in Z^N.
using TorusElement = SparsePoly<LaurentScalar, TorusTag>;
/// Element of the commutative polynomial ring over Q.
using CPoly = SparsePoly<Rational, CommTag>;

}  // namespace qnca
