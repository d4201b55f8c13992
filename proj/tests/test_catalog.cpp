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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qnca/catalog.hpp"
#include "qnca/error.hpp"
#include "qnca/io.hpp"
#include "qnca/seeds.hpp"

using namespace qnca;

namespace {

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

// (s_{n+i-1} ... s_i) for i = 1..m: a reduced word whose quantum Schubert
// cell is R_q[M_{m x n}].
std::vector<int> matrix_word(int m, int n) {
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) {
    for (int a = n + i - 1; a >= i; --a) w.push_back(a);
  }
  return w;
}

}  // namespace

TEST_CASE("Cartan data") {
  for (const std::string t : {"A1", "A3", "B2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
    const CartanData cd = CartanData::from_string(t);
    CHECK(cd.name() == t);
    for (int i = 1; i <= cd.r; ++i) {
      CHECK(cd.entry(i, i) == 2);
      for (int j = 1; j <= cd.r; ++j) {
        CHECK(cd.d[static_cast<std::size_t>(i - 1)] * cd.entry(i, j) ==
              cd.d[static_cast<std::size_t>(j - 1)] * cd.entry(j, i));
        if (i != j) CHECK(cd.entry(i, j) <= 0);
        CHECK((cd.entry(i, j) == 0) == (cd.entry(j, i) == 0));
      }
    }
  }
  CHECK(CartanData::from_string("A2").entry(2, 1) == -1);
  CHECK(CartanData::from_string("G2").entry(1, 2) * CartanData::from_string("G2").entry(2, 1) == 3);
  CHECK_THROWS_AS(CartanData::from_string("X2"), ParseError);
  CHECK_THROWS_AS(CartanData::from_string("D2"), ParseError);
}

TEST_CASE("quantum matrices presets") {
  const CGLPresentation p = quantum_matrices(1, 1);
  CHECK(p.n == 1);
  CHECK(p.delta.empty());
  const CGLPresentation q = quantum_matrices(2, 3);
  CHECK(q.names[qmatrix_index(3, 2, 1)] == "t21");
  CHECK(q.delta.size() == 3);
}

TEST_CASE("quantum minors") {
  const PbwAlgebra alg(quantum_matrices(3, 3));
  CHECK(quantum_minor(alg, 3, 3, {2}, {3}) == alg.generator(qmatrix_index(3, 2, 3)));
  const PbwAlgebra a2(quantum_matrices(2, 2));
  CHECK(quantum_minor(a2, 2, 2, {1, 2}, {1, 2}) == parse_element(a2, "t11*t22 - q*t12*t21"));
  const std::vector<std::vector<int>> sets = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& r : sets) {
    for (const auto& c : sets) CHECK(quantum_minor(alg, 3, 3, r, c) == oracle::quantum_det(alg, 3, r, c));
  }
  CHECK(quantum_minor(alg, 3, 3, {1, 2, 3}, {1, 2, 3}) == oracle::quantum_det(alg, 3, {1, 2, 3}, {1, 2, 3}));
  CHECK(solid_minor(alg, 3, 3, 3, 2) == oracle::quantum_det(alg, 3, {2, 3}, {1, 2}));
  CHECK_THROWS_AS(quantum_minor(alg, 3, 3, {1, 4}, {1, 2}), MathError);
}

TEST_CASE("Schubert exchange matrices") {
  const CartanData a2 = CartanData::from_string("A2");
  const SchubertMatrix sm = schubert_exchange_matrix(a2, {1, 2, 1});
  CHECK(sm.data.ex == std::vector<int>{2});
  CHECK(sm.b == IntMatrix{{1}, {-1}, {0}});

  const SchubertMatrix distinct = schubert_exchange_matrix(CartanData::from_string("A3"), {1, 2, 3});
  CHECK(distinct.data.ex.empty());
  CHECK(distinct.b == IntMatrix{{}, {}, {}});

  const SchubertMatrix s11 = schubert_exchange_matrix(CartanData::from_string("A1"), {1, 1});
  CHECK(s11.b == IntMatrix{{1}, {0}});
  CHECK_THROWS_AS(schubert_exchange_matrix(a2, {1, 3}), MathError);
}

TEST_CASE("Schubert matrices agree with the independent case list") {
  std::mt19937 rng(17);
  for (const std::string t : {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    const CartanData cd = CartanData::from_string(t);
    std::uniform_int_distribution<int> letter(1, cd.r), len(1, 9);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> word(static_cast<std::size_t>(len(rng)));
      for (int& x : word) x = letter(rng);
      const SchubertMatrix sm = schubert_exchange_matrix(cd, word);
      const oracle::CaseListMatrix ref = oracle::schubert(cd, word);
      INFO(t << " word size " << word.size());
      CHECK(one_based(sm.data.ex) == ref.ex);
      CHECK(sm.b == ref.b);
    }
  }
}

TEST_CASE("double Bruhat exchange matrices") {
  const CartanData a1 = CartanData::from_string("A1");
  const BZMatrix bz = bz_exchange_matrix(a1, {1}, {1});
  CHECK(bz.data.ex == std::vector<int>{0, 1});
  CHECK(bz.b == IntMatrix{{0, -1}, {1, 0}, {0, -1}});
  CHECK(bz.data.eps == std::vector<int>{1, 1, -1});

  const BZMatrix empty = bz_exchange_matrix(a1, {}, {});
  CHECK(empty.data.ex == std::vector<int>{0});
  CHECK(empty.b == IntMatrix{{0}});

  // singleton level sets above r only give columns from the first block
  const BZMatrix single = bz_exchange_matrix(CartanData::from_string("A3"), {1, 2}, {3});
  for (int k : single.data.ex) CHECK(k < 3);
}

TEST_CASE("double Bruhat matrices agree with the independent case list") {
  std::mt19937 rng(23);
  for (const std::string t : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    const CartanData cd = CartanData::from_string(t);
    std::uniform_int_distribution<int> letter(1, cd.r), len(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> w(static_cast<std::size_t>(len(rng))), v(static_cast<std::size_t>(len(rng)));
      for (int& x : w) x = letter(rng);
      for (int& x : v) x = letter(rng);
      const BZMatrix bz = bz_exchange_matrix(cd, w, v);
      const oracle::CaseListMatrix ref = oracle::double_bruhat(cd, w, v);
      INFO(t << " |w| " << w.size() << " |v| " << v.size());
      CHECK(one_based(bz.data.ex) == ref.ex);
      CHECK(bz.b == ref.b);
    }
  }
}

TEST_CASE("reduced words in type A") {
  const CartanData a3 = CartanData::from_string("A3");
  CHECK(is_reduced_type_a(a3, {1, 2, 1}));
  CHECK(is_reduced_type_a(a3, {2, 1, 3, 2}));
  CHECK_FALSE(is_reduced_type_a(a3, {1, 1}));
  CHECK_FALSE(is_reduced_type_a(a3, {1, 2, 1, 2}));
  CHECK_THROWS_AS(is_reduced_type_a(CartanData::from_string("B2"), {1, 2}), MathError);
}

TEST_CASE("quantum matrices as a Schubert cell") {
  // Positions of the word correspond to generators in reverse order; the
  // closed-form matrix then matches the one solved from the presentation.
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const std::vector<int> word = matrix_word(m, n);
    const CartanData cd = CartanData::make('A', m + n - 1);
    REQUIRE(is_reduced_type_a(cd, word));
    const SchubertMatrix sm = schubert_exchange_matrix(cd, word);
    const PbwAlgebra alg(quantum_matrices(m, n));
    const SeedPipeline sp = compute_seed_pipeline(alg);
    const int N = m * n;
    INFO(m << "x" << n);
    std::vector<int> reversed_ex;
    for (int k : sm.data.ex) reversed_ex.push_back(N - 1 - k);
    std::sort(reversed_ex.begin(), reversed_ex.end());
    REQUIRE(reversed_ex == sp.seed.ex);
    for (std::size_t c = 0; c < sm.data.ex.size(); ++c) {
      const int col = sp.seed.column_of(N - 1 - sm.data.ex[c]);
      for (int k = 0; k < N; ++k) {
        CHECK(sm.b[static_cast<std::size_t>(k)][c] ==
              sp.seed.b[static_cast<std::size_t>(N - 1 - k)][static_cast<std::size_t>(col)]);
      }
    }
  }
}
