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

#include "qnca/seeds.hpp"

#include <cstdlib>
#include <numeric>

#include "qnca/error.hpp"
#include "qnca/linsolve.hpp"

namespace qnca {

bool ConditionsReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

ConditionsReport check_conditions(const CGLPresentation& p, const PrimeSequence& seq,
                                  const HStarSolution& hs) {
  const int n = seq.n;
  ConditionsReport rep;
  for (int k = 0; k < n; ++k) rep.lambda_star_vexp.push_back(hs.lambda_star_vexp(k));
  const std::vector<int> ex = seq.exchangeable();
  for (int k : ex) rep.dstar.push_back(rep.lambda_star_vexp[static_cast<std::size_t>(k)]);

  rep.checks.push_back({"A", true, "commutation scalars are powers of v = q^(1/2)"});

  auto eta = [&](int k) { return seq.eta[static_cast<std::size_t>(k)]; };
  auto ls = [&](int k) { return rep.lambda_star_vexp[static_cast<std::size_t>(k)]; };
  CheckResult la{"la-isi", true, ""};
  for (int k = 0; k < n && la.passed; ++k) {
    for (int l = 0; l < n && la.passed; ++l) {
      if (eta(k) != eta(l) || seq.succ[static_cast<std::size_t>(k)] == kNoIndex) continue;
      if (seq.succ[static_cast<std::size_t>(l)] != kNoIndex && ls(k) != ls(l)) {
        la.passed = false;
        la.witness = "lambda*_" + std::to_string(k + 1) + " = v^" + std::to_string(ls(k)) +
                     " but lambda*_" + std::to_string(l + 1) + " = v^" + std::to_string(ls(l));
      } else if (seq.pred[static_cast<std::size_t>(l)] != kNoIndex &&
                 ls(k) != -p.lambda_vexp(l, l)) {
        la.passed = false;
        la.witness = "lambda*_" + std::to_string(k + 1) + " = v^" + std::to_string(ls(k)) +
                     " differs from lambda_" + std::to_string(l + 1) + "^-1 = v^" +
                     std::to_string(-p.lambda_vexp(l, l));
      }
    }
  }
  rep.checks.push_back(la);
  if (!la.passed) throw MathError("la-isi: " + la.witness);

  // d_n proportional to the common exponent of lambda* on each level set.
  std::map<int, int> mu;
  for (int k : ex) mu.emplace(eta(k), ls(k));
  for (int e : seq.eta) rep.d.emplace(e, 1);
  CheckResult b{"B", true, ""};
  int g = 0;
  int sign = 0;
  for (const auto& [e, m] : mu) {
    const int s = m > 0 ? 1 : (m < 0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) {
      b.passed = false;
      b.witness = "lambda* exponents on exchangeable level sets are zero or of mixed sign";
      break;
    }
    sign = s;
    g = std::gcd(g, std::abs(m));
  }
  if (b.passed) {
    for (const auto& [e, m] : mu) rep.d[e] = std::abs(m) / g;
    for (int k : ex) {
      for (int l : ex) {
        if (ls(k) * rep.d[eta(l)] != ls(l) * rep.d[eta(k)]) {
          b.passed = false;
          b.witness = "no positive d_n for indices " + std::to_string(k + 1) + ", " +
                      std::to_string(l + 1);
        }
      }
    }
  }
  rep.checks.push_back(b);
  if (!b.passed) throw MathError("condition (B): " + b.witness);
  return rep;
}

IntMatrix solve_exchange_matrix(const CGLPresentation& p, const PrimeSequence& seq,
                                const OmegaTable& t, const std::vector<int>& dstar) {
  const int n = seq.n;
  const auto nu = static_cast<std::size_t>(n);
  const std::vector<int> ex = seq.exchangeable();
  if (dstar.size() != ex.size()) throw MathError("dstar must have one entry per exchangeable index");
  std::vector<IntVec> chibar;
  for (int l = 0; l < n; ++l) chibar.push_back(seq.weight(p, l));

  IntMatrix b(nu, IntVec(ex.size(), 0));
  for (std::size_t col = 0; col < ex.size(); ++col) {
    const int k = ex[col];
    Matrix<Rational> a;
    std::vector<Rational> rhs;
    for (int m = 0; m < n; ++m) {
      std::vector<Rational> row;
      for (int l = 0; l < n; ++l) {
        row.emplace_back(t.exponent(seq.ebar[static_cast<std::size_t>(l)],
                                    seq.ebar[static_cast<std::size_t>(m)]));
      }
      a.push_back(std::move(row));
      rhs.emplace_back(m == k ? dstar[col] : 0);
    }
    for (int j = 0; j < p.torus_rank; ++j) {
      std::vector<Rational> row;
      for (int l = 0; l < n; ++l) row.emplace_back(chibar[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
      a.push_back(std::move(row));
      rhs.emplace_back(0);
    }
    const auto sol = solve_linear<Rational>(std::move(a), std::move(rhs), nu);
    const std::string where = "exchange matrix column " + std::to_string(k + 1);
    if (!sol.consistent) throw MathError(where + ": system is infeasible");
    if (!sol.unique(nu)) {
      throw MathError(where + ": solution is not unique (rank " + std::to_string(sol.rank) +
                      " < " + std::to_string(n) + ")");
    }
    for (std::size_t l = 0; l < nu; ++l) {
      if (sol.x[l].get_den() != 1) {
        throw MathError(where + ": entry " + std::to_string(l + 1) + " = " + to_string(sol.x[l]) +
                        " is not an integer");
      }
      b[l][col] = static_cast<int>(sol.x[l].get_num().get_si());
    }
  }
  return b;
}

int QuantumSeed::column_of(int k) const {
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (ex[i] == k) return static_cast<int>(i);
  }
  return -1;
}

QuantumSeed build_seed(const PrimeSequence& seq, const OmegaTable& t, const IntMatrix& b,
                       const std::vector<int>& dstar, std::vector<int> zeta) {
  QuantumSeed s;
  s.n = seq.n;
  const auto nu = static_cast<std::size_t>(seq.n);
  s.lambda.assign(nu, IntVec(nu, 0));
  for (std::size_t k = 0; k < nu; ++k) {
    for (std::size_t l = 0; l < nu; ++l) s.lambda[k][l] = t.exponent(seq.ebar[k], seq.ebar[l]);
  }
  s.b = b;
  s.ex = seq.exchangeable();
  s.dstar = dstar;
  s.frozen.assign(nu, true);
  for (int k : s.ex) s.frozen[static_cast<std::size_t>(k)] = false;
  for (int k = 0; k < seq.n; ++k) s.vars.push_back(TorusElement::generator(seq.n, k));
  if (zeta.empty()) zeta.assign(nu, 0);
  if (zeta.size() != nu) throw MathError("zeta must have N entries");
  s.zeta = std::move(zeta);
  s.base_lambda = s.lambda;
  return s;
}

std::string compatibility_witness(const QuantumSeed& s) {
  for (std::size_t col = 0; col < s.ex.size(); ++col) {
    const int k = s.ex[col];
    for (int m = 0; m < s.n; ++m) {
      long sum = 0;
      for (int l = 0; l < s.n; ++l) {
        sum += static_cast<long>(s.b[static_cast<std::size_t>(l)][col]) *
               s.lambda[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
      }
      const long want = m == k ? s.dstar[col] : 0;
      if (sum != want) {
        return "column " + std::to_string(k + 1) + ", n = " + std::to_string(m + 1) + ": got " +
               std::to_string(sum) + ", expected " + std::to_string(want);
      }
    }
  }
  return {};
}

SeedPipeline compute_seed_pipeline(const PbwAlgebra& alg, PrimeOptions opts) {
  SeedPipeline sp;
  const CGLPresentation& p = alg.presentation();
  sp.seq = compute_prime_sequence(alg, opts);
  sp.omega = OmegaTable::from_presentation(p);
  sp.hstar = solve_h_star(p);
  sp.conditions = check_conditions(p, sp.seq, sp.hstar);
  const IntMatrix b = solve_exchange_matrix(p, sp.seq, sp.omega, sp.conditions.dstar);
  sp.seed = build_seed(sp.seq, sp.omega, b, sp.conditions.dstar);
  return sp;
}

}  // namespace qnca
