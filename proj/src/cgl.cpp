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

#include "qnca/cgl.hpp"

#include <algorithm>
#include <functional>

#include "qnca/error.hpp"

namespace qnca {

int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

int CGLPresentation::lambda_vexp(int k, int l) const {
  return 2 * dot(h[static_cast<std::size_t>(k)], weights[static_cast<std::size_t>(l)]);
}

NCPoly CGLPresentation::delta_image(int k, int l) const {
  auto it = delta.find({k, l});
  if (it == delta.end()) return NCPoly(n);
  return it->second;
}

bool CGLPresentation::delta_vanishes(int k) const {
  for (int l = 0; l < k; ++l) {
    auto it = delta.find({k, l});
    if (it != delta.end() && !it->second.is_zero()) return false;
  }
  return true;
}

IntVec CGLPresentation::weight_of(const Exponent& e) const {
  IntVec w(static_cast<std::size_t>(torus_rank), 0);
  for (int k = 0; k < n; ++k) {
    const int a = e[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    for (int j = 0; j < torus_rank; ++j) {
      w[static_cast<std::size_t>(j)] +=
          a * weights[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  }
  return w;
}

std::string CGLPresentation::name(int k) const {
  if (static_cast<std::size_t>(k) < names.size() && !names[static_cast<std::size_t>(k)].empty()) {
    return names[static_cast<std::size_t>(k)];
  }
  return "x" + std::to_string(k + 1);
}

void CGLPresentation::check_shape() const {
  if (n < 1) throw InvalidPresentation("presentation needs N >= 1");
  if (torus_rank < 0) throw InvalidPresentation("negative torus rank");
  auto check_matrix = [&](const IntMatrix& m, const char* what) {
    if (static_cast<int>(m.size()) != n) {
      throw InvalidPresentation(std::string(what) + " must have N rows");
    }
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != torus_rank) {
        throw InvalidPresentation(std::string(what) + " rows must have torus_rank entries");
      }
    }
  };
  check_matrix(weights, "weights");
  check_matrix(h, "h");
  if (hstar) check_matrix(*hstar, "hstar");
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw InvalidPresentation("names must have N entries");
  }
  for (const auto& [kl, poly] : delta) {
    const auto [k, l] = kl;
    if (k < 0 || k >= n || l < 0 || l >= k) {
      throw InvalidPresentation("delta entry (" + std::to_string(k + 1) + ", " +
                                std::to_string(l + 1) + ") needs 1 <= l < k <= N");
    }
    for (const auto& [e, c] : poly.terms()) {
      if (static_cast<int>(e.size()) != n) throw InvalidPresentation("delta exponent length");
      for (int i = k; i < n; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) {
          throw InvalidPresentation("delta_" + std::to_string(k + 1) + "(x" +
                                    std::to_string(l + 1) + ") involves x" +
                                    std::to_string(i + 1) + "; it must use generators < k");
        }
      }
    }
  }
}

std::vector<Exponent> weighted_monomials(const IntMatrix& weights, int n, int vars,
                                         const IntVec& target, int cap) {
  const std::size_t r = target.size();
  // lo/hi[i][j]: extreme per-unit-degree contribution of generators >= i.
  std::vector<IntVec> lo(static_cast<std::size_t>(vars) + 1, IntVec(r, 0));
  std::vector<IntVec> hi(static_cast<std::size_t>(vars) + 1, IntVec(r, 0));
  for (int i = vars - 1; i >= 0; --i) {
    for (std::size_t j = 0; j < r; ++j) {
      const int w = weights[static_cast<std::size_t>(i)][j];
      lo[static_cast<std::size_t>(i)][j] = std::min(lo[static_cast<std::size_t>(i) + 1][j], w);
      hi[static_cast<std::size_t>(i)][j] = std::max(hi[static_cast<std::size_t>(i) + 1][j], w);
    }
  }
  std::vector<Exponent> out;
  Exponent cur(static_cast<std::size_t>(n), 0);
  IntVec acc(r, 0);
  std::function<void(int, int)> dfs = [&](int i, int rem) {
    for (std::size_t j = 0; j < r; ++j) {
      const int need = target[j] - acc[j];
      if (need < rem * lo[static_cast<std::size_t>(i)][j] ||
          need > rem * hi[static_cast<std::size_t>(i)][j]) {
        return;
      }
    }
    if (i == vars) {
      if (acc == target) out.push_back(cur);
      return;
    }
    const auto& w = weights[static_cast<std::size_t>(i)];
    for (int a = 0; a <= rem; ++a) {
      cur[static_cast<std::size_t>(i)] = a;
      dfs(i + 1, rem - a);
      for (std::size_t j = 0; j < r; ++j) acc[j] += w[j];
    }
    for (std::size_t j = 0; j < r; ++j) acc[j] -= (rem + 1) * w[j];
    cur[static_cast<std::size_t>(i)] = 0;
  };
  dfs(0, cap);
  return out;
}

}  // namespace qnca
