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

// Acceptance suite: one PASS/FAIL line per criterion, each under a wall-clock
// limit. Exit status is nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qnca/catalog.hpp"
#include "qnca/cli.hpp"
#include "qnca/error.hpp"
#include "qnca/mutation.hpp"
#include "qnca/poisson.hpp"
#include "qnca/primes.hpp"
#include "qnca/seeds.hpp"

using namespace qnca;

namespace {

using Shape = std::pair<int, int>;
const std::vector<Shape> kShapes = {{2, 2}, {2, 3}, {3, 3}};

std::size_t u(int k) { return static_cast<std::size_t>(k); }

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> notes;
  long count = 0;
  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && notes.size() < 8) notes.push_back(what);
    if (!cond && notes.size() == 8) notes.push_back("...");
  }
  bool ok() const { return notes.empty(); }
};

std::string shape_name(const Shape& s) { return std::to_string(s.first) + "x" + std::to_string(s.second); }

// Rank over Q by fraction-free elimination.
int rank_q(std::vector<std::vector<Rational>> a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && u(rank) < a.size(); ++c) {
    std::size_t piv = u(rank);
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[u(rank)]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == u(rank) || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[u(rank)][c];
      for (std::size_t t = c; t < cols; ++t) a[r][t] -= f * a[u(rank)][t];
    }
    ++rank;
  }
  return rank;
}

// 1: solid minors and level sets.
void criterion_1(Check& c) {
  for (const Shape& s : kShapes) {
    const auto [m, n] = s;
    const PbwAlgebra alg(quantum_matrices(m, n));
    const PrimeSequence seq = compute_prime_sequence(alg);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int k = qmatrix_index(n, i, j);
        const auto [rows, cols] = oracle::solid_window(i, j);
        c.expect(seq.y[u(k)] == oracle::quantum_det(alg, n, rows, cols),
                 shape_name(s) + ": y at (" + std::to_string(i) + "," + std::to_string(j) + ") is not the solid minor");
        for (int a = 1; a <= m; ++a) {
          for (int b = 1; b <= n; ++b) {
            const int l = qmatrix_index(n, a, b);
            c.expect((seq.eta[u(k)] == seq.eta[u(l)]) == (j - i == b - a), shape_name(s) + ": level sets differ from j - i");
          }
        }
      }
    }
  }
}

// 2: torus relations in R.
void criterion_2(Check& c) {
  for (const Shape& s : kShapes) {
    const auto [m, n] = s;
    const PbwAlgebra alg(quantum_matrices(m, n));
    const PrimeSequence seq = compute_prime_sequence(alg);
    for (int k = 0; k < m * n; ++k) {
      for (int l = 0; l < m * n; ++l) {
        const int e = oracle::qmatrix_omega_vexp(n, seq.ebar[u(k)], seq.ebar[u(l)]);
        const NCPoly lhs = alg.multiply(seq.y[u(k)], seq.y[u(l)]);
        const NCPoly rhs = alg.multiply(seq.y[u(l)], seq.y[u(k)]).scaled(LaurentScalar(QPower{e}));
        c.expect(lhs == rhs, shape_name(s) + ": y_" + std::to_string(k + 1) + " y_" + std::to_string(l + 1));
      }
    }
  }
}

// 3: exchange matrices.
void criterion_3(Check& c) {
  {
    const SeedPipeline sp = compute_seed_pipeline(PbwAlgebra(quantum_matrices(2, 2)));
    c.expect(sp.seed.b == IntMatrix{{0}, {-1}, {-1}, {1}}, "2x2 column is not (0,-1,-1,1)");
  }
  for (const Shape& s : kShapes) {
    const auto [m, n] = s;
    const int N = m * n;
    const PbwAlgebra alg(quantum_matrices(m, n));
    const SeedPipeline sp = compute_seed_pipeline(alg);
    const CGLPresentation& p = alg.presentation();
    std::vector<IntVec> w;
    for (int l = 0; l < N; ++l) {
      const auto x = oracle::homogeneous_weight(p, sp.seq.y[u(l)]);
      c.expect(x.has_value(), shape_name(s) + ": y not homogeneous");
      w.push_back(x.value_or(IntVec(u(p.torus_rank), 0)));
    }
    // stacked system in b: Omega rows and weight rows
    std::vector<std::vector<Rational>> sys;
    for (int e = 0; e < N; ++e) {
      std::vector<Rational> row;
      for (int l = 0; l < N; ++l) row.emplace_back(oracle::qmatrix_omega_vexp(n, sp.seq.ebar[u(l)], sp.seq.ebar[u(e)]));
      sys.push_back(row);
    }
    for (int t = 0; t < p.torus_rank; ++t) {
      std::vector<Rational> row;
      for (int l = 0; l < N; ++l) row.emplace_back(w[u(l)][u(t)]);
      sys.push_back(row);
    }
    c.expect(rank_q(sys) == N, shape_name(s) + ": exchange system is not of full rank");

    std::vector<int> ex;
    for (int i = 1; i < m; ++i) {
      for (int j = 1; j < n; ++j) ex.push_back(qmatrix_index(n, i, j));
    }
    c.expect(sp.seed.ex == ex, shape_name(s) + ": exchangeable set");
    if (sp.seed.ex != ex) continue;
    for (std::size_t col = 0; col < ex.size(); ++col) {
      const int k = ex[col];
      IntVec weight(u(p.torus_rank), 0);
      for (int l = 0; l < N; ++l) {
        for (std::size_t t = 0; t < weight.size(); ++t) weight[t] += sp.seed.b[u(l)][col] * w[u(l)][t];
      }
      c.expect(weight == IntVec(u(p.torus_rank), 0), shape_name(s) + ": column weight nonzero");
      for (int e = 0; e < N; ++e) {
        int total = 0;
        for (int l = 0; l < N; ++l) {
          total += sp.seed.b[u(l)][col] * oracle::qmatrix_omega_vexp(n, sp.seq.ebar[u(l)], sp.seq.ebar[u(e)]);
        }
        c.expect(total == (e == k ? 4 : 0), shape_name(s) + ": Omega condition at column " + std::to_string(k + 1));
      }
      const int kk = k / n + 1, kl = k % n + 1;
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          c.expect(sp.seed.b[u(qmatrix_index(n, i, j))][col] == oracle::qmatrix_b_entry(i, j, kk, kl),
                   shape_name(s) + ": neighbour pattern");
        }
      }
    }
  }
}

// 4: conditions on lambda*.
void criterion_4(Check& c) {
  for (const Shape& s : kShapes) {
    const SeedPipeline sp = compute_seed_pipeline(PbwAlgebra(quantum_matrices(s.first, s.second)));
    for (int x : sp.conditions.lambda_star_vexp) c.expect(x == 4, shape_name(s) + ": lambda* exponent");
    for (const auto& [eta, d] : sp.conditions.d) c.expect(d == 1, shape_name(s) + ": d_n");
    bool la = false;
    for (const auto& chk : sp.conditions.checks) {
      if (chk.name == "la-isi") la = chk.passed;
    }
    c.expect(la, shape_name(s) + ": la-isi");
  }
}

// 5: mutation.
void criterion_5(Check& c) {
  for (const Shape& s : std::vector<Shape>{{2, 2}, {2, 3}}) {
    const PbwAlgebra alg(quantum_matrices(s.first, s.second));
    const SeedPipeline sp = compute_seed_pipeline(alg);
    for (int k : sp.seed.ex) {
      const QuantumSeed back = mutate(mutate(sp.seed, k), k);
      c.expect(back.b == sp.seed.b && back.lambda == sp.seed.lambda && back.vars == sp.seed.vars,
               shape_name(s) + ": mu_" + std::to_string(k + 1) + " is not an involution");
    }
    ExploreOptions o;
    o.depth = 3;
    const ExploreReport rep = explore_exchange_graph(sp.seed, o, &alg, &sp.seq);
    c.expect(rep.compatibility_failures.empty(), shape_name(s) + ": compatibility failure during exploration");
    for (const auto& es : rep.seeds) {
      c.expect(oracle::compatible(es.seed.b, es.seed.ex, es.seed.lambda, sp.seed.dstar),
               shape_name(s) + ": incompatible seed in exploration");
    }
  }
  const PbwAlgebra alg(quantum_matrices(2, 2));
  const SeedPipeline sp = compute_seed_pipeline(alg);
  const TorusEmbedding emb(alg, sp.seq, sp.seed);
  const QuantumSeed mu = mutate(sp.seed, 0);
  const auto pre = emb.membership(mu.vars[0]);
  const bool single = pre.has_value() && pre->size() == 1;
  c.expect(single, "mu_1 variable is not a single term of R");
  if (single) {
    c.expect(pre->leading().first == Exponent{0, 0, 0, 1}, "mu_1 variable is not a multiple of t22");
    c.expect(pre->leading().second.as_qpower().has_value(), "mu_1 coefficient is not a power of q");
  }
}

// 6: membership round trip.
void criterion_6(Check& c) {
  const PbwAlgebra alg(quantum_matrices(2, 2));
  const SeedPipeline sp = compute_seed_pipeline(alg);
  const TorusEmbedding emb(alg, sp.seq, sp.seed);
  Exponent e(4, 0);
  for (e[0] = 0; e[0] <= 4; ++e[0]) {
    for (e[1] = 0; e[0] + e[1] <= 4; ++e[1]) {
      for (e[2] = 0; e[0] + e[1] + e[2] <= 4; ++e[2]) {
        for (e[3] = 0; e[0] + e[1] + e[2] + e[3] <= 4; ++e[3]) {
          const auto back = emb.membership(emb.embed_monomial(e));
          c.expect(back.has_value() && *back == NCPoly::monomial(e), "monomial does not round trip");
        }
      }
    }
  }
  c.expect(!emb.membership(TorusElement::monomial(Exponent{-1, 0, 0, 0})).has_value(), "M(-e1) accepted");
}

// 7: closed-form families.
void criterion_7(Check& c) {
  const CartanData a2 = CartanData::from_string("A2");
  const SchubertMatrix sm = schubert_exchange_matrix(a2, {1, 2, 1});
  c.expect(sm.data.ex == std::vector<int>{2}, "Schubert exchangeable set is not {3}");
  c.expect(sm.b == IntMatrix{{1}, {-1}, {0}}, "Schubert column is not (1,-1,0)");
  const oracle::CaseListMatrix ref = oracle::schubert(a2, {1, 2, 1});
  c.expect(ref.ex == std::vector<int>{3} && ref.b == sm.b, "Schubert oracle disagrees");

  const CartanData a1 = CartanData::from_string("A1");
  const BZMatrix bz = bz_exchange_matrix(a1, {1}, {1});
  c.expect(bz.b == IntMatrix{{0, -1}, {1, 0}, {0, -1}}, "double Bruhat columns are not (0,1,0), (-1,0,-1)");
  const oracle::CaseListMatrix bref = oracle::double_bruhat(a1, {1}, {1});
  c.expect(bref.b == bz.b, "double Bruhat oracle disagrees");
}

// 8: Xi_N and tau presentations.
void criterion_8(Check& c) {
  for (int n = 1; n <= 10; ++n) {
    const auto xi = enumerate_xi(n);
    c.expect(xi.size() == (std::size_t{1} << (n - 1)), "|Xi_" + std::to_string(n) + "|");
    if (n <= 8) c.expect(xi == oracle::xi_brute(n), "Xi_" + std::to_string(n) + " differs from brute force");
  }
  const PbwAlgebra alg(quantum_matrices(2, 2));
  for (const auto& tau : enumerate_xi(4)) {
    std::string name = "tau (";
    for (int t : tau) name += std::to_string(t + 1);
    name += ")";
    const TauPresentation tp = tau_presentation(alg, tau);
    const PbwAlgebra a(tp.presentation);
    c.expect(validate_cgl(a).cgl_ok(), name + " does not validate");
    const PrimeSequence seq = compute_prime_sequence(a);
    for (int k = 0; k < 4; ++k) {
      c.expect(oracle::homogeneous_weight(tp.presentation, seq.y[u(k)]).has_value(), name + ": y not homogeneous");
      const auto& [e, coef] = seq.y[u(k)].leading();
      bool tri = coef.is_one() && e[u(k)] == 1;
      for (int l = k + 1; l < 4; ++l) tri = tri && e[u(l)] == 0;
      c.expect(tri, name + ": leading term of y_" + std::to_string(k + 1) + " not unitriangular");
    }
  }
}

// 9: Poisson limit.
void criterion_9(Check& c) {
  const PoissonBracket br(poisson_quantum_matrices(2, 2));
  for (const auto& chk : validate_poisson(br).checks) c.expect(chk.passed, "validation: " + chk.name);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> g(0, 3), deg(0, 2), coef(-3, 3);
  auto rand_poly = [&] {
    CPoly p(4);
    for (int t = 0; t < 3; ++t) {
      Exponent e(4, 0);
      for (int d = deg(rng); d > 0; --d) ++e[u(g(rng))];
      p.add_term(e, Rational(coef(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const CPoly a = rand_poly(), b = rand_poly(), d = rand_poly();
    c.expect((br(a, br(b, d)) + br(b, br(d, a)) + br(d, br(a, b))).is_zero(), "Jacobi identity");
  }
  const PoissonPrimeSequence seq = poisson_prime_sequence(br);
  c.expect(seq.y[3] == oracle::classical_det(2, {1, 2}, {1, 2}, 4), "y_4 is not the determinant");
  const SeedPipeline sp = compute_seed_pipeline(PbwAlgebra(quantum_matrices(2, 2)));
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const CPoly prod = cpoly_multiply(seq.y[u(k)], seq.y[u(l)]);
      const Rational w = Rational(sp.seed.lambda[u(k)][u(l)]) / 2;
      c.expect(br(seq.y[u(k)], seq.y[u(l)]) == prod.scaled(w),
               "{y_" + std::to_string(k + 1) + ", y_" + std::to_string(l + 1) + "} is not log-canonical");
    }
  }
  const ClassicalSeed cs = classical_seed_and_gsv_check(br, seq);
  c.expect(cs.ok(), "classical seed checks");
  c.expect(cs.ex == sp.seed.ex && cs.b == sp.seed.b, "classical B differs from the quantum B");
}

int run_job(const JobConfig& cfg, std::string& out) {
  std::ostringstream o, e;
  const int code = run(cfg, o, e);
  out = o.str();
  return code;
}

// Runs the installed binary, returning stdout.
bool run_binary(const std::string& cmd, std::string& out) {
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return false;
  std::array<char, 4096> buf{};
  out.clear();
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
  return pclose(f) == 0;
}

// 10: byte-identical machine output.
void criterion_10(Check& c) {
  std::vector<JobConfig> jobs;
  auto job = [&](const std::string& cmd, const std::string& preset) {
    JobConfig j;
    j.command = cmd;
    j.preset = preset;
    j.format = OutputFormat::kMachine;
    return j;
  };
  for (const std::string shape : {"2x2", "2x3", "3x3"}) {
    jobs.push_back(job("primes", "qmatrix:" + shape));
    jobs.push_back(job("seed", "qmatrix:" + shape));
    jobs.push_back(job("validate", "qmatrix:" + shape));
    jobs.push_back(job("poisson", "poisson-qmatrix:" + shape));
    jobs.push_back(job("catalog", "qmatrix:" + shape));
  }
  JobConfig ex = job("explore", "qmatrix:2x3");
  ex.check_membership = true;
  ex.xi_report = true;
  jobs.push_back(ex);
  JobConfig mu = job("mutate", "qmatrix:3x3");
  mu.sequence = {1, 2, 4, 5};
  jobs.push_back(mu);
  jobs.push_back(job("catalog", "schubert:A2:1,2,1"));
  jobs.push_back(job("catalog", "bz:A1:1:1"));
  jobs.push_back(job("catalog", "schubert:G2:1,2,1,2,1,2"));
  for (const JobConfig& j : jobs) {
    std::string a, b;
    const int ca = run_job(j, a), cb = run_job(j, b);
    c.expect(ca == 0 && cb == 0, j.command + " " + j.preset + " did not succeed");
    c.expect(a == b && !a.empty(), j.command + " " + j.preset + " output differs between runs");
  }
  if (const char* bin = std::getenv("QNCA_BIN")) {
    const std::string base = std::string(bin) + " explore --preset qmatrix:2x3 --format machine --check-membership";
    std::string one, many, again;
    c.expect(run_binary("QNCA_THREADS=1 " + base, one), "binary run with one thread");
    c.expect(run_binary("QNCA_THREADS=4 " + base, many), "binary run with four threads");
    c.expect(run_binary("QNCA_THREADS=4 " + base, again), "second binary run");
    c.expect(!one.empty() && one == many && many == again, "binary output depends on the thread count or run");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "solid minors and level sets", 60, criterion_1},
      {2, "torus relations", 30, criterion_2},
      {3, "exchange matrices", 30, criterion_3},
      {4, "lambda* conditions", 30, criterion_4},
      {5, "mutation", 120, criterion_5},
      {6, "membership", 60, criterion_6},
      {7, "Schubert and double Bruhat families", 30, criterion_7},
      {8, "Xi_N and tau presentations", 60, criterion_8},
      {9, "Poisson limit", 30, criterion_9},
      {10, "determinism", 300, criterion_10},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) c.notes.push_back("took longer than the limit");
    const bool pass = c.ok();
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, cr.limit_s);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << c.count << " checks, " << timing << ")\n";
    for (const auto& n : c.notes) std::cout << "     " << n << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
