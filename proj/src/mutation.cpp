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

#include "qnca/mutation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "qnca/error.hpp"

namespace qnca {

namespace {

int half_exact(long x) {
  if (x % 2 != 0) throw MathError("internal: odd twist exponent in the quantum torus");
  return static_cast<int>(x / 2);
}

std::string vector_text(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

std::string torus_text(const TorusElement& x) {
  std::string s;
  for (const auto& [f, c] : x.terms()) s += "[" + vector_text(f) + "]" + c.to_string() + ";";
  return s;
}

}  // namespace

QuantumTorus::QuantumTorus(IntMatrix l) : l_(std::move(l)) {
  for (std::size_t i = 0; i < l_.size(); ++i) {
    for (std::size_t j = 0; j < l_.size(); ++j) {
      if (l_[i][j] != -l_[j][i] || l_[i][j] % 2 != 0) {
        throw MathError("torus form must be antisymmetric with even entries");
      }
    }
  }
}

long QuantumTorus::pairing(const Exponent& f, const Exponent& g) const {
  long s = 0;
  for (std::size_t i = 0; i < l_.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < l_.size(); ++j) {
      if (g[j] != 0) s += static_cast<long>(f[i]) * l_[i][j] * g[j];
    }
  }
  return s;
}

TorusElement QuantumTorus::multiply(const TorusElement& a, const TorusElement& b) const {
  TorusElement out(n());
  for (const auto& [f, c] : a.terms()) {
    for (const auto& [g, d] : b.terms()) {
      out.add_term(f + g, (c * d).shifted(half_exact(pairing(f, g))));
    }
  }
  return out;
}

TorusElement QuantumTorus::power(const TorusElement& a, int e) const {
  if (e < 0) {
    if (a.size() != 1) throw MathError("negative powers need a single torus monomial");
    const auto& [f, c] = a.leading();
    // M(f) M(-f) = 1 since f^T L f = 0.
    return power(TorusElement::monomial(-f, divide_by_unit(LaurentScalar(1), c)), -e);
  }
  TorusElement out = TorusElement::constant(n(), LaurentScalar(1));
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

TorusElement QuantumTorus::right_divide(const TorusElement& a, const TorusElement& b,
                                        std::size_t cap) const {
  if (b.is_zero()) throw MathError("division by zero in the quantum torus");
  const auto& [g, d] = b.leading();
  TorusElement q(n());
  TorusElement rem = a;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step == cap) throw MathError("torus division did not terminate; divisor does not divide");
    const auto [f, c] = rem.leading();
    const Exponent h = f - g;
    const LaurentScalar alpha = divide_by_unit(c, d).shifted(-half_exact(pairing(h, g)));
    const TorusElement term = TorusElement::monomial(h, alpha);
    q += term;
    rem -= multiply(term, b);
  }
  return q;
}

TorusElement torus_multiply(const TorusElement& a, const TorusElement& b, const QuantumSeed& s) {
  return QuantumTorus(s.base_lambda).multiply(a, b);
}

TorusEmbedding::TorusEmbedding(const PbwAlgebra& alg, const PrimeSequence& seq,
                               const QuantumSeed& seed)
    : alg_(alg), seq_(seq), torus_(seed.base_lambda) {
  const int n = seq.n;
  for (int k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const TorusElement mk =
        TorusElement::monomial(unit_vector(n, k), LaurentScalar::monomial(1, -seed.zeta[ku]));
    const int p = seq.pred[ku];
    if (p == kNoIndex) {
      gens_.push_back(mk);
      continue;
    }
    const TorusElement inv_p = TorusElement::monomial(
        -unit_vector(n, p), LaurentScalar::monomial(1, seed.zeta[static_cast<std::size_t>(p)]));
    gens_.push_back(torus_.multiply(inv_p, mk + embed(*seq.c[ku])));
  }
}

const TorusElement& TorusEmbedding::embed_monomial(const Exponent& a) const {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  int last = -1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)] > 0) {
      last = i;
      break;
    }
  }
  TorusElement val;
  if (last < 0) {
    val = TorusElement::constant(static_cast<int>(a.size()), LaurentScalar(1));
  } else {
    Exponent prev = a;
    --prev[static_cast<std::size_t>(last)];
    val = torus_.multiply(embed_monomial(prev), gens_[static_cast<std::size_t>(last)]);
  }
  return cache_.emplace(a, std::move(val)).first->second;
}

TorusElement TorusEmbedding::embed(const NCPoly& x) const {
  TorusElement out(seq_.n);
  for (const auto& [a, c] : x.terms()) out += embed_monomial(a).scaled(c);
  return out;
}

Exponent TorusEmbedding::bar(const Exponent& f) const {
  Exponent a(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    for (std::size_t i = 0; i < f.size(); ++i) a[i] += f[k] * seq_.ebar[k][i];
  }
  return a;
}

std::optional<NCPoly> TorusEmbedding::membership(const TorusElement& z, std::size_t cap) const {
  NCPoly pre(seq_.n);
  TorusElement rem = z;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step == cap) throw MathError("membership reduction exceeded its step cap");
    const auto [f, c] = rem.leading();
    const Exponent a = bar(f);
    if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) return std::nullopt;
    const TorusElement& img = embed_monomial(a);
    const auto& [g, d] = img.leading();
    if (g != f) {
      throw MathError("triangularity violation: embed(x^[" + vector_text(a) +
                      "]) leads with [" + vector_text(g) + "], expected [" + vector_text(f) +
                      "]");
    }
    if (!d.as_monomial()) {
      throw MathError("triangularity violation: leading coefficient of embed(x^[" +
                      vector_text(a) + "]) is not a unit");
    }
    const LaurentScalar alpha = divide_by_unit(c, d);
    pre.add_term(a, alpha);
    rem -= img.scaled(alpha);
  }
  return pre;
}

QuantumSeed mutate(const QuantumSeed& s, int k) {
  const int col = s.column_of(k);
  if (col < 0 || k < 0 || k >= s.n) {
    throw MathError("index " + std::to_string(k + 1) + " is frozen; cannot mutate");
  }
  const auto nu = static_cast<std::size_t>(s.n);
  const auto ku = static_cast<std::size_t>(k);
  const auto cu = static_cast<std::size_t>(col);
  QuantumSeed t = s;

  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < s.ex.size(); ++j) {
      const int bij = s.b[i][j];
      if (i == ku || j == cu) {
        t.b[i][j] = -bij;
      } else {
        const int bik = s.b[i][cu];
        const int bkj = s.b[ku][j];
        t.b[i][j] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }

  IntMatrix e(nu, IntVec(nu, 0));
  for (std::size_t i = 0; i < nu; ++i) e[i][i] = 1;
  e[ku][ku] = -1;
  for (std::size_t i = 0; i < nu; ++i) {
    if (i != ku) e[i][ku] = std::max(0, -s.b[i][cu]);
  }
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nu; ++j) {
      long acc = 0;
      for (std::size_t a = 0; a < nu; ++a) {
        if (e[a][i] == 0) continue;
        for (std::size_t b = 0; b < nu; ++b) acc += static_cast<long>(e[a][i]) * s.lambda[a][b] * e[b][j];
      }
      t.lambda[i][j] = static_cast<int>(acc);
    }
  }

  const QuantumTorus torus(s.base_lambda);
  // Frame of the current seed on nonnegative vectors.
  auto frame = [&](const Exponent& g) {
    long twist = 0;
    for (std::size_t i = 0; i < nu; ++i) {
      for (std::size_t j = i + 1; j < nu; ++j) twist += static_cast<long>(g[i]) * g[j] * s.lambda[i][j];
    }
    TorusElement out = TorusElement::constant(s.n, LaurentScalar::monomial(1, -half_exact(twist)));
    for (std::size_t i = 0; i < nu; ++i) {
      for (int r = 0; r < g[i]; ++r) out = torus.multiply(out, s.vars[i]);
    }
    return out;
  };
  Exponent g1(nu, 0), g2(nu, 0);
  for (std::size_t i = 0; i < nu; ++i) {
    g1[i] = std::max(0, s.b[i][cu]);
    g2[i] = std::max(0, -s.b[i][cu]);
  }
  auto shift_of = [&](const Exponent& g) {
    long x = 0;
    for (std::size_t i = 0; i < nu; ++i) x += static_cast<long>(g[i]) * s.lambda[i][ku];
    return half_exact(x);
  };
  const TorusElement numer = frame(g1).scaled(LaurentScalar::monomial(1, shift_of(g1))) +
                             frame(g2).scaled(LaurentScalar::monomial(1, shift_of(g2)));
  t.vars[ku] = torus.right_divide(numer, s.vars[ku]);

  for (std::size_t j = 0; j < nu; ++j) {
    if (j == ku) continue;
    const TorusElement lhs = torus.multiply(t.vars[ku], t.vars[j]);
    const TorusElement rhs =
        torus.multiply(t.vars[j], t.vars[ku]).scaled(LaurentScalar::monomial(1, t.lambda[ku][j]));
    if (!(lhs == rhs)) {
      throw MathError("internal: mutated variable " + std::to_string(k + 1) +
                      " violates the mutated commutation matrix at " + std::to_string(j + 1));
    }
  }
  const std::string w = compatibility_witness(t);
  if (!w.empty()) throw MathError("compatibility violated after mutation at " + std::to_string(k + 1) + ": " + w);
  return t;
}

TorusElement normalize_variable(const TorusElement& x) {
  if (x.is_zero()) return x;
  const LaurentScalar& c = x.leading().second;
  return x.scaled(LaurentScalar::monomial(1, -c.min_exponent()));
}

std::string seed_key(const QuantumSeed& s) {
  const auto nu = static_cast<std::size_t>(s.n);
  std::vector<std::string> var(nu);
  for (std::size_t i = 0; i < nu; ++i) var[i] = torus_text(normalize_variable(s.vars[i]));
  std::vector<int> order = s.ex;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return var[static_cast<std::size_t>(a)] < var[static_cast<std::size_t>(b)];
  });
  std::vector<int> perm(nu);
  for (std::size_t i = 0; i < nu; ++i) perm[i] = static_cast<int>(i);
  for (std::size_t c = 0; c < s.ex.size(); ++c) perm[static_cast<std::size_t>(s.ex[c])] = order[c];

  std::ostringstream out;
  for (std::size_t i = 0; i < nu; ++i) out << var[static_cast<std::size_t>(perm[i])] << "|";
  out << "L:";
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nu; ++j) {
      out << s.lambda[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])] << ",";
    }
  }
  out << "B:";
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t c = 0; c < s.ex.size(); ++c) {
      const int oc = s.column_of(perm[static_cast<std::size_t>(s.ex[c])]);
      out << s.b[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(oc)] << ",";
    }
  }
  return out.str();
}

bool same_seed(const QuantumSeed& a, const QuantumSeed& b) { return seed_key(a) == seed_key(b); }

bool ExploreReport::all_members() const {
  return std::all_of(membership.begin(), membership.end(),
                     [](const MembershipRecord& r) { return r.in_r; });
}

int worker_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QNCA_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

namespace {

std::vector<std::string> cluster_strings(const std::vector<TorusElement>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(torus_text(normalize_variable(v)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExploreReport explore_exchange_graph(const QuantumSeed& seed, ExploreOptions opts,
                                     const PbwAlgebra* alg, const PrimeSequence* seq) {
  if (opts.depth < 0) throw MathError("depth must be nonnegative");
  if ((opts.check_membership || opts.xi_report) && (alg == nullptr || seq == nullptr)) {
    throw MathError("membership and Xi reports need the algebra and its prime sequence");
  }
  ExploreReport rep;
  std::map<std::string, std::size_t> seen;
  rep.seeds.push_back({seed, {}, seed_key(seed)});
  seen.emplace(rep.seeds.back().key, 0);
  std::vector<std::size_t> frontier{0};
  const int threads = worker_threads(opts.threads);

  std::optional<TorusEmbedding> emb;
  if (opts.check_membership || opts.xi_report) emb.emplace(*alg, *seq, seed);
  std::map<std::string, MembershipRecord> decided;

  for (int level = 0; level < opts.depth && !frontier.empty(); ++level) {
    struct Task {
      std::size_t parent;
      int k;
    };
    std::vector<Task> tasks;
    for (std::size_t f : frontier) {
      const auto& path = rep.seeds[f].path;
      for (int k : seed.ex) {
        if (!path.empty() && path.back() == k) continue;
        tasks.push_back({f, k});
      }
    }
    std::vector<std::optional<QuantumSeed>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          results[i] = mutate(rep.seeds[tasks[i].parent].seed, tasks[i].k);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(threads, static_cast<int>(tasks.size()));
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::vector<std::size_t> next_frontier;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      std::vector<int> path = rep.seeds[tasks[i].parent].path;
      path.push_back(tasks[i].k);
      if (errors[i]) {
        try {
          std::rethrow_exception(errors[i]);
        } catch (const MathError& e) {
          std::string where;
          for (int x : path) where += " " + std::to_string(x + 1);
          rep.compatibility_failures.push_back("path" + where + ": " + e.what());
          continue;
        }
      }
      QuantumSeed& ns = *results[i];
      if (opts.check_membership) {
        const TorusElement& var = ns.vars[static_cast<std::size_t>(tasks[i].k)];
        const std::string vk = torus_text(normalize_variable(var));
        auto it = decided.find(vk);
        if (it == decided.end()) {
          MembershipRecord r;
          r.path = path;
          r.index = tasks[i].k;
          r.preimage = emb->membership(var);
          r.in_r = r.preimage.has_value();
          it = decided.emplace(vk, r).first;
          rep.membership.push_back(r);
        }
      }
      std::string key = seed_key(ns);
      if (seen.count(key)) continue;
      seen.emplace(key, rep.seeds.size());
      next_frontier.push_back(rep.seeds.size());
      rep.seeds.push_back({std::move(ns), std::move(path), std::move(key)});
    }
    frontier = std::move(next_frontier);
  }

  if (opts.xi_report) {
    std::map<std::vector<std::string>, std::size_t> clusters;
    for (std::size_t i = 0; i < rep.seeds.size(); ++i) {
      clusters.emplace(cluster_strings(rep.seeds[i].seed.vars), i);
    }
    for (const auto& tau : enumerate_xi(seq->n)) {
      XiReach xr;
      xr.tau = tau;
      const TauPresentation tp = tau_presentation(*alg, tau);
      const PbwAlgebra talg(tp.presentation);
      const PrimeSequence tseq = compute_prime_sequence(talg);
      std::vector<TorusElement> vars;
      for (const auto& y : tseq.y) {
        NCPoly back(seq->n);
        for (const auto& [a, c] : y.terms()) {
          std::vector<int> word;
          for (std::size_t i = 0; i < a.size(); ++i) {
            for (int r = 0; r < a[i]; ++r) word.push_back(tau[i]);
          }
          back += alg->word_product(word).scaled(c);
        }
        vars.push_back(emb->embed(back));
      }
      auto it = clusters.find(cluster_strings(vars));
      if (it != clusters.end()) {
        xr.reached = true;
        xr.path = rep.seeds[it->second].path;
      }
      rep.xi.push_back(std::move(xr));
    }
  }
  return rep;
}

}  // namespace qnca
