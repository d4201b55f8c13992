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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qnca/ore.hpp"
#include "qnca/primes.hpp"
#include "qnca/seeds.hpp"

namespace qnca {

/// Based quantum torus with M(f) M(g) = v^{f^T L g / 2} M(f + g), so that
/// M(e_k) M(e_l) = v^{L_kl} M(e_l) M(e_k). L is antisymmetric with even
/// entries.
class QuantumTorus {
 public:
  explicit QuantumTorus(IntMatrix l);

  int n() const { return static_cast<int>(l_.size()); }
  const IntMatrix& form() const { return l_; }
  /// f^T L g.
  long pairing(const Exponent& f, const Exponent& g) const;

  TorusElement monomial(const Exponent& f, const LaurentScalar& c = LaurentScalar(1)) const {
    return TorusElement::monomial(f, c);
  }
  TorusElement multiply(const TorusElement& a, const TorusElement& b) const;
  TorusElement power(const TorusElement& a, int e) const;
  /// Exact q with q * b = a. Throws MathError when b's leading coefficient
  /// is not a unit or the division does not terminate within `cap` steps.
  TorusElement right_divide(const TorusElement& a, const TorusElement& b,
                            std::size_t cap = 200'000) const;

 private:
  IntMatrix l_;
};

/// M(f) M(g) with the seed's base form.
TorusElement torus_multiply(const TorusElement& a, const TorusElement& b, const QuantumSeed& s);

/// The embedding R -> T given by x_k = zeta_{p(k)} M(-e_{p(k)})
/// (zeta_k^{-1} M(e_k) + c_k) and x_k = zeta_k^{-1} M(e_k) for fresh k.
/// Caches images of PBW monomials; not thread-safe.
class TorusEmbedding {
 public:
  TorusEmbedding(const PbwAlgebra& alg, const PrimeSequence& seq, const QuantumSeed& seed);

  const QuantumTorus& torus() const { return torus_; }
  const TorusElement& generator_image(int k) const { return gens_[static_cast<std::size_t>(k)]; }
  TorusElement embed(const NCPoly& x) const;
  const TorusElement& embed_monomial(const Exponent& a) const;

  /// bar(f) = sum_k f_k ebar_k.
  Exponent bar(const Exponent& f) const;

  /// Preimage of z in R, or nullopt when z is not in the image. Throws
  /// MathError when a leading-term invariant fails (with witness).
  std::optional<NCPoly> membership(const TorusElement& z, std::size_t cap = 100'000) const;

 private:
  const PbwAlgebra& alg_;
  const PrimeSequence& seq_;
  QuantumTorus torus_;
  std::vector<TorusElement> gens_;
  mutable std::unordered_map<Exponent, TorusElement, ExponentHash> cache_;
};

/// Quantum seed mutation in direction k (0-based, exchangeable).
/// Throws MathError for frozen k or when compatibility fails afterwards.
QuantumSeed mutate(const QuantumSeed& s, int k);

/// Equal up to v-power rescaling of each cluster variable.
bool same_seed(const QuantumSeed& a, const QuantumSeed& b);
/// Canonical text key: variables normalized by the v-power of their leading
/// coefficient, exchangeable positions sorted, Lambda and B permuted along.
std::string seed_key(const QuantumSeed& s);
/// Variable normalized so that its RevLex-leading coefficient has no v-power.
TorusElement normalize_variable(const TorusElement& x);

struct ExploreOptions {
  int depth = 3;
  bool check_membership = false;
  /// Check which seeds of the presentations indexed by Xi_N are reached.
  bool xi_report = false;
  int threads = 0;  // 0: QNCA_THREADS or hardware concurrency
};

struct ExploredSeed {
  QuantumSeed seed;
  std::vector<int> path;  // mutation directions from the initial seed
  std::string key;
};

struct MembershipRecord {
  std::vector<int> path;
  int index = 0;
  bool in_r = false;
  std::optional<NCPoly> preimage;
};

struct XiReach {
  std::vector<int> tau;
  bool reached = false;
  std::vector<int> path;
};

struct ExploreReport {
  std::vector<ExploredSeed> seeds;  // BFS order, deduplicated
  std::vector<MembershipRecord> membership;
  std::vector<XiReach> xi;
  std::vector<std::string> compatibility_failures;
  bool all_members() const;
};

/// Breadth-first exploration of mutation sequences up to the depth.
/// Membership and Xi reports need the algebra and prime sequence.
ExploreReport explore_exchange_graph(const QuantumSeed& seed, ExploreOptions opts,
                                     const PbwAlgebra* alg = nullptr,
                                     const PrimeSequence* seq = nullptr);

/// Worker count from QNCA_THREADS, else hardware concurrency, at least one.
int worker_threads(int requested = 0);

}  // namespace qnca
