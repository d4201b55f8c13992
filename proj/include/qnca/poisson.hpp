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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnca/cgl.hpp"
#include "qnca/ore.hpp"

namespace qnca {

using RationalVec = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVec>;

/// Nilpotent semi-quadratic Poisson algebra on K[x_1, ..., x_N]:
///   {x_k, x_l} = <h_k, chi_l> x_k x_l + delta_k(x_l),   l < k.
struct PoissonPresentation {
  int n = 0;
  int torus_rank = 0;
  IntMatrix weights;
  RationalMatrix h;
  std::optional<RationalMatrix> hstar;
  std::map<std::pair<int, int>, CPoly> delta;  // (k, l), l < k
  std::vector<std::string> names;

  Rational lambda(int k, int l) const;  // <h_k, chi_l>
  CPoly delta_image(int k, int l) const;
  bool delta_vanishes(int k) const;
  IntVec weight_of(const Exponent& e) const;
  std::string name(int k) const;
  void check_shape() const;
};

CPoly cpoly_multiply(const CPoly& a, const CPoly& b);
CPoly cpoly_derivative(const CPoly& a, int k);

/// Biderivation bracket from the generator table.
class PoissonBracket {
 public:
  explicit PoissonBracket(PoissonPresentation p);
  const PoissonPresentation& presentation() const { return p_; }
  const CPoly& generator_bracket(int k, int l) const {
    return table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  CPoly operator()(const CPoly& a, const CPoly& b) const;
  CPoly generator(int k) const { return CPoly::generator(p_.n, k); }
  /// delta_k(b) = {x_k, b} - d_{h_k}(b) x_k for b on generators < k.
  CPoly delta_apply(int k, const CPoly& b) const;

 private:
  PoissonPresentation p_;
  std::vector<std::vector<CPoly>> table_;
};

/// Reverse-order elements h*_k with <h*_k, chi_l> = -<h_l, chi_k> (l > k).
struct PoissonHStar {
  RationalMatrix hstar;
  RationalVec lambda_star;  // <h*_k, chi_k>
  std::vector<bool> determined;
};
/// Throws MathError when the rational system is infeasible.
PoissonHStar solve_poisson_h_star(const PoissonPresentation& p);

/// Check names: "jacobi", "homogeneity", "nilpotency", "eigenvalue",
/// "symmetry".
ValidationReport validate_poisson(const PoissonBracket& br, ValidationCaps caps = {});

struct PoissonPrimeSequence {
  int n = 0;
  IntVec eta;
  IntVec pred;
  IntVec succ;
  std::vector<std::optional<CPoly>> c;
  std::vector<CPoly> y;
  std::vector<IntVec> ebar;
  int rank = 0;

  std::vector<int> exchangeable() const;
};

/// Same recursion as the quantum case with Poisson normality
/// {y, x_j} = omega(ebar, e_j) x_j y imposed for j <= k.
PoissonPrimeSequence poisson_prime_sequence(const PoissonBracket& br, int degree_cap = 12);

/// Additive bicharacter: omega(e_k, e_l) = <h_k, chi_l> for k > l.
RationalMatrix poisson_omega(const PoissonPresentation& p);
Rational omega_value(const RationalMatrix& w, const IntVec& f, const IntVec& g);

struct ClassicalSeed {
  RationalMatrix omega;  // {y_k, y_l} = omega[k][l] y_k y_l
  IntMatrix b;
  std::vector<int> ex;
  RationalVec dstar;     // per ex column
  std::map<int, int> d;  // eta value -> d_n
  std::vector<CheckResult> checks;  // "log-canonical", "la-isi", "B", "exchange"
  bool ok() const;
};

/// Log-canonicity of {y_k, y_l}, the additive condition (B), and the
/// additive exchange-matrix solve. Failures are recorded in `checks`; the
/// matrix is left empty when it cannot be solved.
ClassicalSeed classical_seed_and_gsv_check(const PoissonBracket& br,
                                           const PoissonPrimeSequence& seq);

/// Semiclassical limit of R_q[M_{m x n}]: {t_ij, t_il} = t_ij t_il,
/// {t_ij, t_kj} = t_ij t_kj, {t_il, t_kj} = 0, {t_ij, t_kl} = 2 t_il t_kj.
PoissonPresentation poisson_quantum_matrices(int m, int n);

}  // namespace qnca
