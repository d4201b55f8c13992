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
#include <vector>

#include "qnca/ore.hpp"
#include "qnca/primes.hpp"

namespace qnca {

/// Outcome of conditions (A) and (B) and the level-set identities for the
/// eigenvalues lambda*_k.
struct ConditionsReport {
  std::vector<int> lambda_star_vexp;  // every index
  std::vector<int> dstar;             // per exchangeable index, in ex order
  std::map<int, int> d;               // eta value -> d_n
  std::vector<CheckResult> checks;    // "A", "la-isi", "B"

  bool ok() const;
};

/// Throws MathError naming the first failed check.
ConditionsReport check_conditions(const CGLPresentation& p, const PrimeSequence& seq,
                                  const HStarSolution& hs);

/// Unique integer matrix with, for every k in ex,
///   sum_l b_lk Omega(ebar_l, ebar_n) = lambda*_k^{[k = n]}   (exponent form)
///   sum_l b_lk chi(y_l) = 0.
/// Rows follow [1, N], columns follow ex. Throws MathError when the rational
/// solution is not unique, not integral, or does not exist.
IntMatrix solve_exchange_matrix(const CGLPresentation& p, const PrimeSequence& seq,
                                const OmegaTable& t, const std::vector<int>& dstar);

/// A quantum seed whose cluster variables are written in the quantum torus
/// of the initial seed. In that base torus M(f) M(g) = v^{f^T L g / 2} M(f+g)
/// with L = `base_lambda`.
struct QuantumSeed {
  int n = 0;
  IntMatrix lambda;       // X_k X_l = v^{lambda[k][l]} X_l X_k
  IntMatrix b;            // n x ex
  std::vector<int> ex;
  std::vector<int> dstar;  // per ex column
  std::vector<TorusElement> vars;
  std::vector<bool> frozen;
  std::vector<int> zeta;   // v-exponents of the rescalings, initial seed only
  IntMatrix base_lambda;

  int column_of(int k) const;  // position of k in ex or -1
};

/// Initial seed: Lambda = Omega(ebar_k, ebar_l), frame variables M(e_k)
/// standing for zeta_k y_k. `zeta` holds v-exponents (default all zero).
QuantumSeed build_seed(const PrimeSequence& seq, const OmegaTable& t, const IntMatrix& b,
                       const std::vector<int>& dstar, std::vector<int> zeta = {});

/// Exponent identity sum_l b_lk lambda[l][n] = dstar_k [k = n]; returns a
/// witness string on failure, empty on success.
std::string compatibility_witness(const QuantumSeed& s);

/// Convenience pipeline from a presentation to the initial seed.
struct SeedPipeline {
  PrimeSequence seq;
  OmegaTable omega;
  HStarSolution hstar;
  ConditionsReport conditions;
  QuantumSeed seed;
};
SeedPipeline compute_seed_pipeline(const PbwAlgebra& alg, PrimeOptions opts = {});

}  // namespace qnca
