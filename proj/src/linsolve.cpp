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

#include "qnca/linsolve.hpp"

namespace qnca {

std::optional<IntegerSolution> solve_integer_system(const Matrix<Integer>& a,
                                                    const std::vector<Integer>& b,
                                                    std::size_t unknowns) {
  const std::size_t rows = a.size();
  Matrix<Integer> h = a;
  // u starts as the identity; h = a * u throughout.
  Matrix<Integer> u(unknowns, std::vector<Integer>(unknowns, Integer(0)));
  for (std::size_t i = 0; i < unknowns; ++i) u[i][i] = 1;

  auto column_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < rows; ++i) h[i][dst] -= f * h[i][src];
    for (std::size_t i = 0; i < unknowns; ++i) u[i][dst] -= f * u[i][src];
  };
  auto column_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(h[i][x], h[i][y]);
    for (std::size_t i = 0; i < unknowns; ++i) std::swap(u[i][x], u[i][y]);
  };

  std::vector<std::optional<std::size_t>> pivot_of_row(rows);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows && rank < unknowns; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      bool others = false;
      for (std::size_t c = rank; c < unknowns; ++c) {
        if (sgn(h[i][c]) == 0) continue;
        if (!best || abs(h[i][c]) < abs(h[i][*best])) best = c;
      }
      if (!best) break;
      if (*best != rank) column_swap(*best, rank);
      for (std::size_t c = rank + 1; c < unknowns; ++c) {
        if (sgn(h[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[i][rank].get_mpz_t());
        column_axpy(c, rank, q);
        if (sgn(h[i][c]) != 0) others = true;
      }
      if (!others) break;
    }
    if (sgn(h[i][rank]) != 0) {
      pivot_of_row[i] = rank;
      ++rank;
    }
  }

  std::vector<Integer> y(unknowns, Integer(0));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer acc = 0;
    for (std::size_t c = 0; c < rank; ++c) acc += h[i][c] * y[c];
    Integer rest = b[i] - acc;
    if (pivot_of_row[i]) {
      const std::size_t c = *pivot_of_row[i];
      if (!mpz_divisible_p(rest.get_mpz_t(), h[i][c].get_mpz_t())) return std::nullopt;
      y[c] = rest / h[i][c];
    } else if (sgn(rest) != 0) {
      return std::nullopt;
    }
  }

  IntegerSolution sol;
  sol.particular.assign(unknowns, Integer(0));
  for (std::size_t r = 0; r < unknowns; ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) sol.particular[r] += u[r][c] * y[c];
  }
  for (std::size_t c = rank; c < unknowns; ++c) {
    std::vector<Integer> k(unknowns);
    for (std::size_t r = 0; r < unknowns; ++r) k[r] = u[r][c];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace qnca
