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

#include "qnca/scalars.hpp"
#include "qnca/sparse.hpp"

namespace qnca {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

/// Full data of an iterated skew polynomial extension
/// K[x_1][x_2; sigma_2, delta_2] ... [x_N; sigma_N, delta_N] with a torus
/// action. Indices are 0-based in code and 1-based in text.
///
/// The torus element h_k is stored through q-exponents: it acts on a weight
/// chi by q^{<h_k, chi>}. Hence sigma_k(x_l) = lambda_{kl} x_l with
/// lambda_{kl} = q^{<h_k, chi_l>}, and the relations read
///   x_k x_l = lambda_{kl} x_l x_k + delta_k(x_l),   l < k.
struct CGLPresentation {
  int n = 0;
  int torus_rank = 0;
  IntMatrix weights;                 // n x torus_rank characters chi_k
  IntMatrix h;                       // n x torus_rank q-exponent vectors
  std::optional<IntMatrix> hstar;    // reverse-order torus elements, optional
  std::map<std::pair<int, int>, NCPoly> delta;  // (k, l), l < k, nonzero only
  std::vector<std::string> names;    // optional display names

  /// v-exponent of lambda_{kl} = h_k . x_l (any k, l).
  int lambda_vexp(int k, int l) const;
  QPower lambda(int k, int l) const { return QPower{lambda_vexp(k, l)}; }

  /// delta_k(x_l) or the zero polynomial.
  NCPoly delta_image(int k, int l) const;
  /// True when delta_k(x_l) = 0 for every l < k.
  bool delta_vanishes(int k) const;

  IntVec weight_of(const Exponent& e) const;
  std::string name(int k) const;

  /// Checks array shapes and that each delta_k(x_l) lives on generators < k.
  /// Throws InvalidPresentation.
  void check_shape() const;
};

int dot(const IntVec& a, const IntVec& b);

/// Exponents on the first `vars` of n generators with weight `target` and
/// total degree <= cap, by depth-first search with per-coordinate pruning.
std::vector<Exponent> weighted_monomials(const IntMatrix& weights, int n, int vars,
                                         const IntVec& target, int cap);

}  // namespace qnca
