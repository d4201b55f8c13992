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
#include <optional>
#include <utility>
#include <vector>

#include "qnca/scalars.hpp"

namespace qnca {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Result of an exact solve of A x = b over a field.
template <class F>
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<F> x;  // particular solution, free unknowns set to zero
  bool unique(std::size_t unknowns) const { return consistent && rank == unknowns; }
};

/// Gauss-Jordan elimination over an exact field `F` (Rational or RatFunc).
template <class F>
LinearSolution<F> solve_linear(Matrix<F> a, std::vector<F> b, std::size_t unknowns) {
  using qnca::is_zero;
  const std::size_t rows = a.size();
  LinearSolution<F> sol;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < unknowns; ++j) {
      if (!is_zero(a[r][j])) a[r][j] = a[r][j] * inv;
    }
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const F f = a[i][c];
      for (std::size_t j = c; j < unknowns; ++j) {
        if (!is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
      }
      if (!is_zero(b[r])) b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  sol.rank = r;
  sol.consistent = true;
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(b[i])) sol.consistent = false;
  }
  sol.x.assign(unknowns, F(0));
  if (sol.consistent) {
    for (std::size_t i = 0; i < r; ++i) sol.x[pivot_col[i]] = b[i];
  }
  return sol;
}

/// Rank of a matrix over an exact field.
template <class F>
std::size_t matrix_rank(const Matrix<F>& a, std::size_t cols) {
  std::vector<F> zero(a.size(), F(0));
  return solve_linear<F>(a, zero, cols).rank;
}

/// General integer solution of A x = b: x = particular + Z-span(kernel).
struct IntegerSolution {
  std::vector<Integer> particular;
  std::vector<std::vector<Integer>> kernel;
};

/// Solves A x = b over the integers via column Hermite reduction.
/// Returns nullopt when no integer solution exists.
std::optional<IntegerSolution> solve_integer_system(const Matrix<Integer>& a,
                                                    const std::vector<Integer>& b,
                                                    std::size_t unknowns);

}  // namespace qnca
