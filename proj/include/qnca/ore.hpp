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

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "qnca/cgl.hpp"

namespace qnca {

/// Exact multiplication in PBW normal form for a CGL presentation.
///
/// Products are normal-formed by moving generators right to left with
/// x_k x_l -> lambda_{kl} x_l x_k + delta_k(x_l); each delta lowers the
/// largest generator involved, so rewriting terminates for well-shaped
/// input. Products of a PBW monomial with one generator are memoized, which
/// makes an instance cheap to reuse but not safe to share across threads.
class PbwAlgebra {
 public:
  /// `step_cap` bounds the number of distinct rewriting steps.
  explicit PbwAlgebra(CGLPresentation p, std::size_t step_cap = 50'000'000);

  const CGLPresentation& presentation() const { return p_; }
  int n() const { return p_.n; }

  NCPoly one() const { return NCPoly::constant(p_.n, LaurentScalar(1)); }
  NCPoly generator(int k) const { return NCPoly::generator(p_.n, k); }
  NCPoly pbw_monomial(const Exponent& e) const { return NCPoly::monomial(e); }

  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  /// Product of PBW monomials x^a x^b.
  NCPoly monomial_product(const Exponent& a, const Exponent& b) const;
  /// Product of the generators listed in `word`, in that order.
  NCPoly word_product(const std::vector<int>& word) const;
  NCPoly power(const NCPoly& a, int n) const;

  /// sigma_k(b) for b on generators < k (also valid on all generators,
  /// since sigma_k acts diagonally by lambda_{k,i}).
  NCPoly sigma(int k, const NCPoly& b) const;
  /// delta_k(b) through the twisted Leibniz rule
  /// delta(uv) = sigma(u) delta(v) + delta(u) v. Throws InvalidPresentation
  /// when b involves generators >= k.
  NCPoly skew_derivation(int k, const NCPoly& b) const;

  std::size_t cache_size() const { return cache_.size(); }

 private:
  const NCPoly& times_generator(const Exponent& a, int j) const;
  NCPoly poly_times_generator(const NCPoly& a, int j) const;

  CGLPresentation p_;
  std::size_t step_cap_;
  mutable std::size_t steps_ = 0;
  // key = exponent with the generator index appended
  mutable std::unordered_map<Exponent, NCPoly, ExponentHash> cache_;
};

/// Outcome of one named check with a human-readable witness on failure.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  int nilpotency_cap = 64;

  bool ok() const;
  /// Every check except "symmetry", i.e. the iterated Ore extension is CGL.
  bool cgl_ok() const;
  const CheckResult* find(const std::string& name) const;
};

struct ValidationCaps {
  int nilpotency = 64;
};

/// Checks homogeneity of all delta images, non-root-of-unity eigenvalues,
/// local nilpotency on generators within the cap, associativity on all
/// triples x_k x_l x_m with k > l > m, and the symmetric straightening law
/// together with solvability of the reverse-order torus elements.
/// Check names: "homogeneity", "eigenvalue", "nilpotency", "associativity",
/// "symmetry".
ValidationReport validate_cgl(const PbwAlgebra& alg, ValidationCaps caps = {});

/// Torus elements h*_k for the reverse order, with the eigenvalues
/// lambda*_k = h*_k . x_k.
struct HStarSolution {
  IntMatrix hstar;                 // q-exponent vectors
  std::vector<int> lambda_star_q;  // q-exponent of lambda*_k
  std::vector<bool> determined;    // lambda*_k forced by the constraints
  bool unique() const;
  int lambda_star_vexp(int k) const { return 2 * lambda_star_q[static_cast<std::size_t>(k)]; }
};

/// Solves <h*_k, chi_l> = -<h_l, chi_k> for all l > k over the integers.
/// When the presentation supplies hstar it is verified and returned.
/// Where the constraints leave lambda*_k free, the solution with
/// lambda*_k = lambda_k^{-1} is preferred when it is integral, otherwise any
/// nonzero value is taken. Throws MathError for an infeasible system.
HStarSolution solve_h_star(const CGLPresentation& p);

}  // namespace qnca
