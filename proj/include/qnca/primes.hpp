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

#include <functional>
#include <optional>
#include <vector>

#include "qnca/ore.hpp"

namespace qnca {

/// Sentinel for p(k) = -infinity and s(k) = +infinity.
inline constexpr int kNoIndex = -1;

/// v-exponents of the bicharacter Omega on the standard basis:
/// Omega(e_k, e_l) = v^{vexp[k][l]}.
struct OmegaTable {
  IntMatrix vexp;

  static OmegaTable from_presentation(const CGLPresentation& p);
  int size() const { return static_cast<int>(vexp.size()); }
  /// v-exponent of Omega(f, g) = f^T vexp g.
  int exponent(const IntVec& f, const IntVec& g) const;
};

QPower omega(const OmegaTable& t, const IntVec& f, const IntVec& g);

/// The canonical sequence of homogeneous prime elements of the chain
/// R_1 subset R_2 subset ... subset R_N, with its level-set data.
struct PrimeSequence {
  int n = 0;
  IntVec eta;   // level-set labels, consecutive from 1
  IntVec pred;  // kNoIndex for -infinity
  IntVec succ;  // kNoIndex for +infinity
  std::vector<bool> delta_nonzero;
  std::vector<std::optional<NCPoly>> c;  // set where delta_k != 0
  std::vector<NCPoly> y;
  std::vector<IntVec> ebar;
  int rank = 0;

  /// Exchangeable indices {k | s(k) != +infinity}, increasing.
  std::vector<int> exchangeable() const;
  /// torus weight of y_k, i.e. the sum of chi over the ladder of k.
  IntVec weight(const CGLPresentation& p, int k) const;
};

struct PrimeOptions {
  int degree_cap = 12;
  /// Try open predecessor candidates from the largest index down.
  bool reverse_candidate_order = false;
};

/// Runs the recursion y_k = y_{p(k)} x_k - c_k (or y_k = x_k when delta_k
/// vanishes on R_{k-1}). For each open level set l the element c_k is found
/// by an exact linear solve over Q(v) in the finite space of PBW
/// polynomials on x_1..x_{k-1} with the weight of y_l x_k, imposing
/// y x_j = Omega(ebar_l + e_k, e_j) x_j y for all j <= k. Every candidate
/// is tried; exactly one must succeed.
/// Throws DegreeCapExceeded, UniquenessViolation.
PrimeSequence compute_prime_sequence(const PbwAlgebra& alg, PrimeOptions opts = {});

/// q_kl = Omega(ebar_k, ebar_l), after checking y_k y_l = q_kl y_l y_k
/// exactly in R for every pair. Throws MathError naming the pair.
std::vector<std::vector<QPower>> quasi_commutation_scalars(const PbwAlgebra& alg,
                                                           const PrimeSequence& seq,
                                                           const OmegaTable& t);

/// The presentation reindexed by tau, generator k of the result being
/// x_{tau(k)} of the input. `index_map[k] = tau(k)` (0-based).
struct TauPresentation {
  CGLPresentation presentation;
  std::vector<int> index_map;
};

/// True when every prefix image tau([1,k]) is an interval.
bool is_in_xi(const std::vector<int>& tau);

/// Builds the presentation for tau in Xi_N: each new generator is either
/// one past the current maximum (keeps h_{tau(k)}, delta) or one below the
/// current minimum (takes h*_{tau(k)} and the reverse-order relation).
/// Correction terms are rewritten into the new PBW order by multiplying in
/// the partially built presentation. Throws MathError if tau is not in Xi_N
/// or the input is not symmetric.
TauPresentation tau_presentation(const PbwAlgebra& alg, const std::vector<int>& tau);

/// All tau in Xi_N as 0-based value sequences, lexicographically ordered.
std::vector<std::vector<int>> enumerate_xi(int n);
void for_each_xi(int n, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace qnca
