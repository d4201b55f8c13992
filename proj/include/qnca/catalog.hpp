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

#include "qnca/cgl.hpp"
#include "qnca/ore.hpp"

namespace qnca {

/// R_q[M_{m x n}] with x_{(i-1)n+j} = t_ij. Generator names are "tij".
/// When `with_hstar` is set the reverse-order torus elements h*_ij = -h_ij
/// are attached.
CGLPresentation quantum_matrices(int m, int n, bool with_hstar = true);

/// 0-based generator index of t_ij (1-based i, j).
inline int qmatrix_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }

/// Quantum minor Delta_{I,J} = sum over sigma of (-q)^{l(sigma)}
/// t_{i_1 j_sigma(1)} ... t_{i_k j_sigma(k)} in R_q[M_{m x n}].
/// I and J are increasing 1-based index lists of equal size.
NCPoly quantum_minor(const PbwAlgebra& alg, int m, int n, const std::vector<int>& rows,
                     const std::vector<int>& cols);

/// Solid minor Delta_{[i-min+1, i], [j-min+1, j]}, min = min(i, j).
NCPoly solid_minor(const PbwAlgebra& alg, int m, int n, int i, int j);

/// Cartan matrix and symmetrizers of a finite type root system.
struct CartanData {
  char type = 'A';
  int r = 0;
  IntMatrix c;  // 0-based
  IntVec d;     // d_i c_ij symmetric, gcd 1

  /// "A3", "B2", "G2", ... Throws ParseError on unknown types.
  static CartanData from_string(const std::string& s);
  static CartanData make(char type, int rank);
  std::string name() const { return std::string(1, type) + std::to_string(r); }
  int entry(int i, int j) const {  // 1-based letters
    return c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
};

/// Positional data of a word (i_1, ..., i_N). Indices are 0-based, with
/// kNoIndex for -infinity (kminus) and +infinity (kplus).
struct ReducedWordData {
  std::vector<int> word;  // letters in [1, r]
  std::vector<int> kminus;
  std::vector<int> kplus;
  std::vector<int> ex;    // {k | k^- != -infinity}
};

ReducedWordData word_data(const std::vector<int>& word);

struct SchubertMatrix {
  ReducedWordData data;
  IntMatrix b;  // N rows, one column per entry of data.ex
};

/// Closed-form exchange matrix of the quantum Schubert cell algebra
/// U^-[w] for the word. Throws MathError for out-of-range letters.
SchubertMatrix schubert_exchange_matrix(const CartanData& cd, const std::vector<int>& word);

struct BZData {
  int r = 0;
  int m = 0;  // length of the word for v
  int n = 0;  // length of the word for w
  std::vector<int> eta;   // letters, per 0-based index in [0, r+M+N)
  std::vector<int> eps;   // +1 / -1
  std::vector<int> pred;  // 0-based, kNoIndex for -infinity
  std::vector<int> succ;  // 0-based, kNoIndex for +infinity
  std::vector<int> ex;
};

struct BZMatrix {
  BZData data;
  IntMatrix b;  // r+M+N rows, one column per entry of data.ex
};

/// Exchange matrix B~_{w,v} of the double Bruhat cell for reduced words of
/// w and v. Throws MathError for out-of-range letters.
BZMatrix bz_exchange_matrix(const CartanData& cd, const std::vector<int>& word_w,
                            const std::vector<int>& word_v);

/// Length check for type A words through the permutation realization.
/// Returns false when the word is not reduced. Throws MathError for other
/// types (the check is not available).
bool is_reduced_type_a(const CartanData& cd, const std::vector<int>& word);

}  // namespace qnca
