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

#include "qnca/primes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qnca/error.hpp"
#include "qnca/linsolve.hpp"
#include "qnca/ratfunc.hpp"

namespace qnca {

OmegaTable OmegaTable::from_presentation(const CGLPresentation& p) {
  OmegaTable t;
  t.vexp.assign(static_cast<std::size_t>(p.n), IntVec(static_cast<std::size_t>(p.n), 0));
  for (int k = 0; k < p.n; ++k) {
    for (int l = 0; l < k; ++l) {
      const int e = p.lambda_vexp(k, l);
      t.vexp[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = e;
      t.vexp[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = -e;
    }
  }
  return t;
}

int OmegaTable::exponent(const IntVec& f, const IntVec& g) const {
  int s = 0;
  for (std::size_t i = 0; i < vexp.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < vexp.size(); ++j) s += f[i] * vexp[i][j] * g[j];
  }
  return s;
}

QPower omega(const OmegaTable& t, const IntVec& f, const IntVec& g) {
  return QPower{t.exponent(f, g)};
}

std::vector<int> PrimeSequence::exchangeable() const {
  std::vector<int> ex;
  for (int k = 0; k < n; ++k) {
    if (succ[static_cast<std::size_t>(k)] != kNoIndex) ex.push_back(k);
  }
  return ex;
}

IntVec PrimeSequence::weight(const CGLPresentation& p, int k) const {
  return p.weight_of(ebar[static_cast<std::size_t>(k)]);
}

namespace {

/// Attempts to find c with y_l x_k - c normal in R_k. Returns nullopt when
/// no solution exists up to the degree cap.
std::optional<NCPoly> solve_candidate(const PbwAlgebra& alg, const PrimeSequence& seq,
                                      const OmegaTable& omega_t, int k, int l, int degree_cap) {
  const CGLPresentation& p = alg.presentation();
  const int n = p.n;
  const auto lu = static_cast<std::size_t>(l);
  const IntVec ebar = seq.ebar[lu] + unit_vector(n, k);
  const NCPoly prod = alg.multiply(seq.y[lu], alg.generator(k));
  const IntVec target = p.weight_of(ebar);

  std::vector<NCPoly> gens;
  std::vector<QPower> scal;
  std::vector<NCPoly> rhs;
  for (int j = 0; j <= k; ++j) {
    gens.push_back(alg.generator(j));
    scal.push_back(omega(omega_t, ebar, unit_vector(n, j)));
    rhs.push_back(alg.multiply(prod, gens.back()) -
                  alg.multiply(gens.back(), prod).scaled(scal.back()));
  }

  const int start = seq.y[lu].degree() + 1;
  std::vector<int> schedule;
  for (int d = std::min(start, degree_cap); d < degree_cap; d *= 2) {
    schedule.push_back(d);
    if (d == 0) break;
  }
  schedule.push_back(degree_cap);

  const std::vector<Exponent> all = weighted_monomials(p.weights, p.n, k, target, degree_cap);
  std::vector<std::vector<NCPoly>> cols;  // cols[m][j]
  std::size_t prev = static_cast<std::size_t>(-1);
  for (int d : schedule) {
    std::vector<Exponent> space;
    for (const auto& e : all) {
      if (total_degree(e) <= d) space.push_back(e);
    }
    if (space.size() == prev) continue;
    prev = space.size();
    while (cols.size() < space.size()) {
      const NCPoly xm = NCPoly::monomial(space[cols.size()]);
      std::vector<NCPoly> per_j;
      for (int j = 0; j <= k; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        per_j.push_back(alg.multiply(xm, gens[ju]) - alg.multiply(gens[ju], xm).scaled(scal[ju]));
      }
      cols.push_back(std::move(per_j));
    }

    // One equation per (j, PBW monomial).
    std::map<std::pair<int, Exponent>, std::size_t> row_of;
    auto row = [&](int j, const Exponent& e) {
      auto [it, inserted] = row_of.emplace(std::make_pair(j, e), row_of.size());
      return it->second;
    };
    for (std::size_t m = 0; m < space.size(); ++m) {
      for (int j = 0; j <= k; ++j) {
        for (const auto& [e, c] : cols[m][static_cast<std::size_t>(j)].terms()) row(j, e);
      }
    }
    const std::size_t covered = row_of.size();
    bool hopeless = false;
    for (int j = 0; j <= k && !hopeless; ++j) {
      for (const auto& [e, c] : rhs[static_cast<std::size_t>(j)].terms()) {
        if (row(j, e) >= covered) {
          hopeless = true;
          break;
        }
      }
    }
    if (hopeless) continue;

    Matrix<RatFunc> a(row_of.size(), std::vector<RatFunc>(space.size()));
    std::vector<RatFunc> b(row_of.size());
    for (std::size_t m = 0; m < space.size(); ++m) {
      for (int j = 0; j <= k; ++j) {
        for (const auto& [e, c] : cols[m][static_cast<std::size_t>(j)].terms()) {
          a[row(j, e)][m] = RatFunc::from_laurent(c);
        }
      }
    }
    for (int j = 0; j <= k; ++j) {
      for (const auto& [e, c] : rhs[static_cast<std::size_t>(j)].terms()) {
        b[row(j, e)] = RatFunc::from_laurent(c);
      }
    }
    auto sol = solve_linear(std::move(a), std::move(b), space.size());
    if (!sol.consistent) continue;
    if (!sol.unique(space.size())) {
      throw UniquenessViolation("the correction term c_" + std::to_string(k + 1) +
                                " for predecessor " + std::to_string(l + 1) +
                                " is not unique");
    }
    NCPoly c(n);
    for (std::size_t m = 0; m < space.size(); ++m) {
      LaurentScalar coeff;
      if (!sol.x[m].to_laurent(coeff)) {
        throw MathError("the correction term c_" + std::to_string(k + 1) +
                        " has a coefficient outside Q[v, v^-1]");
      }
      c.add_term(space[m], coeff);
    }
    // Certify normality exactly.
    const NCPoly y = prod - c;
    for (int j = 0; j <= k; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      if (!(alg.multiply(y, gens[ju]) == alg.multiply(gens[ju], y).scaled(scal[ju]))) {
        throw MathError("internal: solved element fails normality at x" + std::to_string(j + 1));
      }
    }
    return c;
  }
  return std::nullopt;
}

}  // namespace

PrimeSequence compute_prime_sequence(const PbwAlgebra& alg, PrimeOptions opts) {
  const CGLPresentation& p = alg.presentation();
  const int n = p.n;
  const auto nu = static_cast<std::size_t>(n);
  const OmegaTable omega_t = OmegaTable::from_presentation(p);
  PrimeSequence seq;
  seq.n = n;
  seq.eta.assign(nu, 0);
  seq.pred.assign(nu, kNoIndex);
  seq.succ.assign(nu, kNoIndex);
  seq.delta_nonzero.assign(nu, false);
  seq.c.assign(nu, std::nullopt);
  seq.y.assign(nu, NCPoly(n));
  seq.ebar.assign(nu, IntVec(nu, 0));
  int next_eta = 1;

  for (int k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (p.delta_vanishes(k)) {
      seq.y[ku] = alg.generator(k);
      seq.eta[ku] = next_eta++;
      seq.ebar[ku] = unit_vector(n, k);
      continue;
    }
    seq.delta_nonzero[ku] = true;
    std::vector<int> candidates;
    for (int l = 0; l < k; ++l) {
      if (seq.succ[static_cast<std::size_t>(l)] == kNoIndex) candidates.push_back(l);
    }
    if (opts.reverse_candidate_order) std::reverse(candidates.begin(), candidates.end());
    std::vector<std::pair<int, NCPoly>> found;
    for (int l : candidates) {
      if (auto c = solve_candidate(alg, seq, omega_t, k, l, opts.degree_cap)) {
        found.emplace_back(l, std::move(*c));
      }
    }
    if (found.empty()) {
      throw DegreeCapExceeded("no predecessor for y_" + std::to_string(k + 1) +
                              " admits a correction term of degree <= " +
                              std::to_string(opts.degree_cap));
    }
    if (found.size() > 1) {
      throw UniquenessViolation("predecessors " + std::to_string(found[0].first + 1) + " and " +
                                std::to_string(found[1].first + 1) + " both give prime y_" +
                                std::to_string(k + 1) + "; the input is not a CGL extension");
    }
    const int l = found.front().first;
    const auto lu = static_cast<std::size_t>(l);
    seq.pred[ku] = l;
    seq.succ[lu] = k;
    seq.eta[ku] = seq.eta[lu];
    seq.ebar[ku] = seq.ebar[lu] + unit_vector(n, k);
    seq.y[ku] = alg.multiply(seq.y[lu], alg.generator(k)) - found.front().second;
    seq.c[ku] = std::move(found.front().second);
  }
  seq.rank = next_eta - 1;
  return seq;
}

std::vector<std::vector<QPower>> quasi_commutation_scalars(const PbwAlgebra& alg,
                                                           const PrimeSequence& seq,
                                                           const OmegaTable& t) {
  const auto nu = static_cast<std::size_t>(seq.n);
  std::vector<std::vector<QPower>> q(nu, std::vector<QPower>(nu));
  for (std::size_t k = 0; k < nu; ++k) {
    for (std::size_t l = 0; l < nu; ++l) {
      q[k][l] = omega(t, seq.ebar[k], seq.ebar[l]);
      if (l < k) continue;
      const NCPoly lhs = alg.multiply(seq.y[k], seq.y[l]);
      const NCPoly rhs = alg.multiply(seq.y[l], seq.y[k]).scaled(q[k][l]);
      if (!(lhs == rhs)) {
        throw MathError("y_" + std::to_string(k + 1) + " y_" + std::to_string(l + 1) +
                        " != Omega(ebar_k, ebar_l) y_l y_k");
      }
    }
  }
  return q;
}

bool is_in_xi(const std::vector<int>& tau) {
  const int n = static_cast<int>(tau.size());
  std::vector<bool> seen(tau.size(), false);
  int lo = 0, hi = 0;
  for (int k = 0; k < n; ++k) {
    const int t = tau[static_cast<std::size_t>(k)];
    if (t < 0 || t >= n || seen[static_cast<std::size_t>(t)]) return false;
    seen[static_cast<std::size_t>(t)] = true;
    if (k == 0) {
      lo = hi = t;
    } else if (t == hi + 1) {
      hi = t;
    } else if (t == lo - 1) {
      lo = t;
    } else {
      return false;
    }
  }
  return true;
}

TauPresentation tau_presentation(const PbwAlgebra& alg, const std::vector<int>& tau) {
  const CGLPresentation& p = alg.presentation();
  const int n = p.n;
  if (static_cast<int>(tau.size()) != n || !is_in_xi(tau)) {
    throw MathError("permutation is not in Xi_N (some prefix image is not an interval)");
  }
  for (const auto& [kl, poly] : p.delta) {
    for (const auto& [e, c] : poly.terms()) {
      for (int i = 0; i <= kl.second; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) {
          throw MathError("presentation is not symmetric: delta_" + std::to_string(kl.first + 1) +
                          "(x" + std::to_string(kl.second + 1) + ") involves x" +
                          std::to_string(i + 1));
        }
      }
    }
  }
  const HStarSolution hs = solve_h_star(p);

  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])] = i;

  TauPresentation out;
  out.index_map = tau;
  CGLPresentation& q = out.presentation;
  q.n = n;
  q.torus_rank = p.torus_rank;
  for (int i = 0; i < n; ++i) {
    q.weights.push_back(p.weights[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])]);
    if (!p.names.empty()) q.names.push_back(p.name(tau[static_cast<std::size_t>(i)]));
  }
  q.h.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(p.torus_rank), 0));
  const int t0 = tau.front();
  q.h[0] = p.h[static_cast<std::size_t>(t0)];
  int lo = t0, hi = t0;

  for (int i = 1; i < n; ++i) {
    const int a = tau[static_cast<std::size_t>(i)];
    const bool up = a == hi + 1;
    q.h[static_cast<std::size_t>(i)] =
        up ? p.h[static_cast<std::size_t>(a)] : hs.hstar[static_cast<std::size_t>(a)];
    if (up) {
      hi = a;
    } else {
      lo = a;
    }
    const PbwAlgebra partial(q);
    for (int j = 0; j < i; ++j) {
      const int b = tau[static_cast<std::size_t>(j)];
      NCPoly corr(n);
      int want_vexp = 0;
      if (up) {
        corr = p.delta_image(a, b);
        want_vexp = p.lambda_vexp(a, b);
      } else {
        const QPower inv = p.lambda(b, a).inverse();
        corr = -p.delta_image(b, a).scaled(inv);
        want_vexp = inv.vexp;
      }
      if (q.lambda_vexp(i, j) != want_vexp) {
        throw MathError("internal: reindexed commutation scalar mismatch");
      }
      NCPoly rewritten(n);
      for (const auto& [e, c] : corr.terms()) {
        std::vector<int> word;
        for (int g = 0; g < n; ++g) {
          for (int t = 0; t < e[static_cast<std::size_t>(g)]; ++t) {
            word.push_back(inverse[static_cast<std::size_t>(g)]);
          }
        }
        rewritten += partial.word_product(word).scaled(c);
      }
      if (!rewritten.is_zero()) q.delta.emplace(std::make_pair(i, j), std::move(rewritten));
    }
  }
  (void)lo;
  return out;
}

void for_each_xi(int n, const std::function<void(const std::vector<int>&)>& fn) {
  for (const auto& tau : enumerate_xi(n)) fn(tau);
}

std::vector<std::vector<int>> enumerate_xi(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> cur;
  std::function<void(int, int)> grow = [&](int lo, int hi) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    if (lo > 0) {
      cur.push_back(lo - 1);
      grow(lo - 1, hi);
      cur.pop_back();
    }
    if (hi < n - 1) {
      cur.push_back(hi + 1);
      grow(lo, hi + 1);
      cur.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    cur = {s};
    grow(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qnca
