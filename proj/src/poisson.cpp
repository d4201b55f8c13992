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

#include "qnca/poisson.hpp"

#include <algorithm>
#include <numeric>

#include "qnca/catalog.hpp"
#include "qnca/error.hpp"
#include "qnca/linsolve.hpp"
#include "qnca/primes.hpp"

namespace qnca {

Rational PoissonPresentation::lambda(int k, int l) const {
  Rational s = 0;
  const auto& hk = h[static_cast<std::size_t>(k)];
  const auto& cl = weights[static_cast<std::size_t>(l)];
  for (std::size_t i = 0; i < hk.size(); ++i) s += hk[i] * cl[i];
  return s;
}

CPoly PoissonPresentation::delta_image(int k, int l) const {
  auto it = delta.find({k, l});
  return it == delta.end() ? CPoly(n) : it->second;
}

bool PoissonPresentation::delta_vanishes(int k) const {
  for (int l = 0; l < k; ++l) {
    auto it = delta.find({k, l});
    if (it != delta.end() && !it->second.is_zero()) return false;
  }
  return true;
}

IntVec PoissonPresentation::weight_of(const Exponent& e) const {
  IntVec w(static_cast<std::size_t>(torus_rank), 0);
  for (std::size_t k = 0; k < e.size(); ++k) {
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += e[k] * weights[k][j];
  }
  return w;
}

std::string PoissonPresentation::name(int k) const {
  if (static_cast<std::size_t>(k) < names.size() && !names[static_cast<std::size_t>(k)].empty()) {
    return names[static_cast<std::size_t>(k)];
  }
  return "x" + std::to_string(k + 1);
}

void PoissonPresentation::check_shape() const {
  if (n < 1) throw InvalidPresentation("presentation needs N >= 1");
  auto rows = [&](std::size_t count, const char* what) {
    if (count != static_cast<std::size_t>(n)) {
      throw InvalidPresentation(std::string(what) + " must have N rows");
    }
  };
  rows(weights.size(), "weights");
  rows(h.size(), "h");
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != torus_rank) throw InvalidPresentation("weights rows");
  }
  for (const auto& w : h) {
    if (static_cast<int>(w.size()) != torus_rank) throw InvalidPresentation("h rows");
  }
  if (hstar) {
    rows(hstar->size(), "hstar");
    for (const auto& w : *hstar) {
      if (static_cast<int>(w.size()) != torus_rank) throw InvalidPresentation("hstar rows");
    }
  }
  if (!names.empty()) rows(names.size(), "names");
  for (const auto& [kl, poly] : delta) {
    const auto [k, l] = kl;
    if (k < 0 || k >= n || l < 0 || l >= k) {
      throw InvalidPresentation("delta entry (" + std::to_string(k + 1) + ", " +
                                std::to_string(l + 1) + ") needs 1 <= l < k <= N");
    }
    for (const auto& [e, c] : poly.terms()) {
      for (int i = k; i < n; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) {
          throw InvalidPresentation("delta_" + std::to_string(k + 1) + "(x" +
                                    std::to_string(l + 1) + ") must use generators < k");
        }
      }
    }
  }
}

CPoly cpoly_multiply(const CPoly& a, const CPoly& b) {
  CPoly out(std::max(a.nvars(), b.nvars()));
  for (const auto& [e, c] : a.terms()) {
    for (const auto& [f, d] : b.terms()) out.add_term(e + f, c * d);
  }
  return out;
}

CPoly cpoly_derivative(const CPoly& a, int k) {
  CPoly out(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    const int ek = e[static_cast<std::size_t>(k)];
    if (ek == 0) continue;
    Exponent f = e;
    --f[static_cast<std::size_t>(k)];
    out.add_term(f, c * ek);
  }
  return out;
}

PoissonBracket::PoissonBracket(PoissonPresentation p) : p_(std::move(p)) {
  p_.check_shape();
  const auto nu = static_cast<std::size_t>(p_.n);
  table_.assign(nu, std::vector<CPoly>(nu, CPoly(p_.n)));
  for (int k = 0; k < p_.n; ++k) {
    for (int l = 0; l < k; ++l) {
      CPoly v = p_.delta_image(k, l);
      Exponent e(nu, 0);
      ++e[static_cast<std::size_t>(k)];
      ++e[static_cast<std::size_t>(l)];
      v.add_term(e, p_.lambda(k, l));
      table_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = -v;
      table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = std::move(v);
    }
  }
}

CPoly PoissonBracket::operator()(const CPoly& a, const CPoly& b) const {
  CPoly out(p_.n);
  for (int k = 0; k < p_.n; ++k) {
    const CPoly da = cpoly_derivative(a, k);
    if (da.is_zero()) continue;
    for (int l = 0; l < p_.n; ++l) {
      if (k == l) continue;
      const CPoly& g = generator_bracket(k, l);
      if (g.is_zero()) continue;
      const CPoly db = cpoly_derivative(b, l);
      if (db.is_zero()) continue;
      out += cpoly_multiply(cpoly_multiply(da, db), g);
    }
  }
  return out;
}

CPoly PoissonBracket::delta_apply(int k, const CPoly& b) const {
  CPoly out(p_.n);
  for (int l = 0; l < k; ++l) {
    const CPoly db = cpoly_derivative(b, l);
    if (db.is_zero()) continue;
    out += cpoly_multiply(db, p_.delta_image(k, l));
  }
  for (const auto& [e, c] : b.terms()) {
    for (int l = k; l < p_.n; ++l) {
      if (e[static_cast<std::size_t>(l)] != 0) {
        throw InvalidPresentation("delta_" + std::to_string(k + 1) +
                                  " applied outside the subalgebra on generators < k");
      }
    }
  }
  return out;
}

PoissonHStar solve_poisson_h_star(const PoissonPresentation& p) {
  const auto nu = static_cast<std::size_t>(p.n);
  const auto r = static_cast<std::size_t>(p.torus_rank);
  PoissonHStar out;
  out.hstar.assign(nu, RationalVec(r, Rational(0)));
  out.lambda_star.assign(nu, Rational(0));
  out.determined.assign(nu, true);
  auto pair = [&](const RationalVec& a, const IntVec& chi) {
    Rational s = 0;
    for (std::size_t i = 0; i < r; ++i) s += a[i] * chi[i];
    return s;
  };
  for (int k = 0; k < p.n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    Matrix<Rational> a;
    std::vector<Rational> b;
    for (int l = k + 1; l < p.n; ++l) {
      RationalVec row;
      for (int x : p.weights[static_cast<std::size_t>(l)]) row.emplace_back(x);
      a.push_back(row);
      b.push_back(-p.lambda(l, k));
    }
    if (p.hstar) {
      const RationalVec& hs = (*p.hstar)[ku];
      for (std::size_t i = 0; i < a.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < r; ++j) s += a[i][j] * hs[j];
        if (s != b[i]) throw MathError("supplied hstar_" + std::to_string(k + 1) + " is inconsistent");
      }
      out.hstar[ku] = hs;
      out.lambda_star[ku] = pair(hs, p.weights[ku]);
      continue;
    }
    const auto base = solve_linear<Rational>(a, b, r);
    if (!base.consistent) {
      throw MathError("no reverse-order element h*_" + std::to_string(k + 1) + " exists");
    }
    // Prefer lambda*_k = -lambda_k when chi_k is not forced.
    Matrix<Rational> a2 = a;
    std::vector<Rational> b2 = b;
    RationalVec chi;
    for (int x : p.weights[ku]) chi.emplace_back(x);
    a2.push_back(chi);
    b2.push_back(-p.lambda(k, k));
    const auto pref = solve_linear<Rational>(a2, b2, r);
    const bool forced = pref.rank == base.rank;
    out.determined[ku] = forced;
    out.hstar[ku] = pref.consistent ? pref.x : base.x;
    out.lambda_star[ku] = pair(out.hstar[ku], p.weights[ku]);
  }
  return out;
}

ValidationReport validate_poisson(const PoissonBracket& br, ValidationCaps caps) {
  const PoissonPresentation& p = br.presentation();
  ValidationReport rep;
  rep.nilpotency_cap = caps.nilpotency;

  CheckResult jac{"jacobi", true, ""};
  for (int a = 0; a < p.n && jac.passed; ++a) {
    for (int b = a + 1; b < p.n && jac.passed; ++b) {
      for (int c = b + 1; c < p.n && jac.passed; ++c) {
        const CPoly xa = br.generator(a), xb = br.generator(b), xc = br.generator(c);
        const CPoly s = br(xa, br.generator_bracket(b, c)) + br(xb, br.generator_bracket(c, a)) +
                        br(xc, br.generator_bracket(a, b));
        if (!s.is_zero()) {
          jac.passed = false;
          jac.witness = "triple (" + p.name(a) + ", " + p.name(b) + ", " + p.name(c) + ")";
        }
      }
    }
  }
  rep.checks.push_back(jac);

  CheckResult hom{"homogeneity", true, ""};
  for (const auto& [kl, poly] : p.delta) {
    IntVec want = p.weights[static_cast<std::size_t>(kl.first)];
    for (std::size_t j = 0; j < want.size(); ++j) want[j] += p.weights[static_cast<std::size_t>(kl.second)][j];
    for (const auto& [e, c] : poly.terms()) {
      if (p.weight_of(e) != want && hom.passed) {
        hom.passed = false;
        hom.witness = "delta_" + std::to_string(kl.first + 1) + "(x" +
                      std::to_string(kl.second + 1) + ") is not of weight chi_k + chi_l";
      }
    }
  }
  rep.checks.push_back(hom);

  CheckResult nil{"nilpotency", true, ""};
  for (int k = 0; k < p.n && nil.passed; ++k) {
    for (int l = 0; l < k && nil.passed; ++l) {
      CPoly cur = br.generator(l);
      int steps = 0;
      while (!cur.is_zero() && steps < caps.nilpotency) {
        cur = br.delta_apply(k, cur);
        ++steps;
      }
      if (!cur.is_zero()) {
        nil.passed = false;
        nil.witness = "delta_" + std::to_string(k + 1) + "^" + std::to_string(caps.nilpotency) +
                      "(x" + std::to_string(l + 1) + ") != 0";
      }
    }
  }
  rep.checks.push_back(nil);

  CheckResult eig{"eigenvalue", true, ""};
  for (int k = 0; k < p.n; ++k) {
    if (sgn(p.lambda(k, k)) == 0) {
      eig.passed = false;
      eig.witness = "<h_" + std::to_string(k + 1) + ", chi_" + std::to_string(k + 1) + "> = 0";
      break;
    }
  }
  rep.checks.push_back(eig);

  CheckResult sym{"symmetry", true, ""};
  for (const auto& [kl, poly] : p.delta) {
    for (const auto& [e, c] : poly.terms()) {
      for (int i = 0; i <= kl.second; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0 && sym.passed) {
          sym.passed = false;
          sym.witness = "delta_" + std::to_string(kl.first + 1) + "(x" +
                        std::to_string(kl.second + 1) + ") involves x" + std::to_string(i + 1);
        }
      }
    }
  }
  if (sym.passed) {
    try {
      solve_poisson_h_star(p);
    } catch (const MathError& e) {
      sym.passed = false;
      sym.witness = e.what();
    }
  }
  rep.checks.push_back(sym);
  return rep;
}

std::vector<int> PoissonPrimeSequence::exchangeable() const {
  std::vector<int> ex;
  for (int k = 0; k < n; ++k) {
    if (succ[static_cast<std::size_t>(k)] != kNoIndex) ex.push_back(k);
  }
  return ex;
}

RationalMatrix poisson_omega(const PoissonPresentation& p) {
  const auto nu = static_cast<std::size_t>(p.n);
  RationalMatrix w(nu, RationalVec(nu, Rational(0)));
  for (int k = 0; k < p.n; ++k) {
    for (int l = 0; l < k; ++l) {
      w[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = p.lambda(k, l);
      w[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = -p.lambda(k, l);
    }
  }
  return w;
}

Rational omega_value(const RationalMatrix& w, const IntVec& f, const IntVec& g) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (g[j] != 0) s += w[i][j] * f[i] * g[j];
    }
  }
  return s;
}

namespace {

std::optional<CPoly> solve_poisson_candidate(const PoissonBracket& br,
                                             const PoissonPrimeSequence& seq,
                                             const RationalMatrix& w, int k, int l,
                                             int degree_cap) {
  const PoissonPresentation& p = br.presentation();
  const int n = p.n;
  const auto lu = static_cast<std::size_t>(l);
  const IntVec ebar = seq.ebar[lu] + unit_vector(n, k);
  const CPoly prod = cpoly_multiply(seq.y[lu], br.generator(k));
  const IntVec target = p.weight_of(ebar);

  std::vector<Rational> beta;
  std::vector<CPoly> rhs;
  auto normality = [&](const CPoly& y, int j) {
    return br(y, br.generator(j)) -
           cpoly_multiply(br.generator(j), y).scaled(beta[static_cast<std::size_t>(j)]);
  };
  for (int j = 0; j <= k; ++j) {
    beta.push_back(omega_value(w, ebar, unit_vector(n, j)));
    rhs.push_back(normality(prod, j));
  }
  const std::vector<Exponent> all = weighted_monomials(p.weights, n, k, target, degree_cap);
  const int start = seq.y[lu].degree() + 1;
  std::vector<int> schedule;
  for (int d = std::min(start, degree_cap); d < degree_cap && d > 0; d *= 2) schedule.push_back(d);
  schedule.push_back(degree_cap);

  std::size_t prev = static_cast<std::size_t>(-1);
  for (int d : schedule) {
    std::vector<Exponent> space;
    for (const auto& e : all) {
      if (total_degree(e) <= d) space.push_back(e);
    }
    if (space.size() == prev) continue;
    prev = space.size();
    std::map<std::pair<int, Exponent>, std::size_t> row_of;
    auto row = [&](int j, const Exponent& e) {
      return row_of.emplace(std::make_pair(j, e), row_of.size()).first->second;
    };
    std::vector<std::vector<CPoly>> cols;
    for (const auto& e : space) {
      std::vector<CPoly> per_j;
      for (int j = 0; j <= k; ++j) {
        per_j.push_back(normality(CPoly::monomial(e), j));
        for (const auto& [f, c] : per_j.back().terms()) row(j, f);
      }
      cols.push_back(std::move(per_j));
    }
    const std::size_t covered = row_of.size();
    bool hopeless = false;
    for (int j = 0; j <= k; ++j) {
      for (const auto& [f, c] : rhs[static_cast<std::size_t>(j)].terms()) {
        if (row(j, f) >= covered) hopeless = true;
      }
    }
    if (hopeless) continue;
    Matrix<Rational> a(row_of.size(), std::vector<Rational>(space.size(), Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (std::size_t m = 0; m < space.size(); ++m) {
      for (int j = 0; j <= k; ++j) {
        for (const auto& [f, c] : cols[m][static_cast<std::size_t>(j)].terms()) a[row(j, f)][m] = c;
      }
    }
    for (int j = 0; j <= k; ++j) {
      for (const auto& [f, c] : rhs[static_cast<std::size_t>(j)].terms()) b[row(j, f)] = c;
    }
    const auto sol = solve_linear<Rational>(std::move(a), std::move(b), space.size());
    if (!sol.consistent) continue;
    if (!sol.unique(space.size())) {
      throw UniquenessViolation("the Poisson correction term c_" + std::to_string(k + 1) +
                                " is not unique");
    }
    CPoly c(n);
    for (std::size_t m = 0; m < space.size(); ++m) c.add_term(space[m], sol.x[m]);
    const CPoly y = prod - c;
    for (int j = 0; j <= k; ++j) {
      if (!normality(y, j).is_zero()) {
        throw MathError("internal: Poisson normality fails at x" + std::to_string(j + 1));
      }
    }
    return c;
  }
  return std::nullopt;
}

}  // namespace

PoissonPrimeSequence poisson_prime_sequence(const PoissonBracket& br, int degree_cap) {
  const PoissonPresentation& p = br.presentation();
  const int n = p.n;
  const auto nu = static_cast<std::size_t>(n);
  const RationalMatrix w = poisson_omega(p);
  PoissonPrimeSequence seq;
  seq.n = n;
  seq.eta.assign(nu, 0);
  seq.pred.assign(nu, kNoIndex);
  seq.succ.assign(nu, kNoIndex);
  seq.c.assign(nu, std::nullopt);
  seq.y.assign(nu, CPoly(n));
  seq.ebar.assign(nu, IntVec(nu, 0));
  int next_eta = 1;
  for (int k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (p.delta_vanishes(k)) {
      seq.y[ku] = br.generator(k);
      seq.eta[ku] = next_eta++;
      seq.ebar[ku] = unit_vector(n, k);
      continue;
    }
    std::vector<std::pair<int, CPoly>> found;
    for (int l = 0; l < k; ++l) {
      if (seq.succ[static_cast<std::size_t>(l)] != kNoIndex) continue;
      if (auto c = solve_poisson_candidate(br, seq, w, k, l, degree_cap)) found.emplace_back(l, *c);
    }
    if (found.empty()) {
      throw DegreeCapExceeded("no predecessor for the Poisson prime y_" + std::to_string(k + 1) +
                              " within degree " + std::to_string(degree_cap));
    }
    if (found.size() > 1) {
      throw UniquenessViolation("several predecessors give a Poisson prime y_" +
                                std::to_string(k + 1));
    }
    const int l = found.front().first;
    const auto lu = static_cast<std::size_t>(l);
    seq.pred[ku] = l;
    seq.succ[lu] = k;
    seq.eta[ku] = seq.eta[lu];
    seq.ebar[ku] = seq.ebar[lu] + unit_vector(n, k);
    seq.y[ku] = cpoly_multiply(seq.y[lu], br.generator(k)) - found.front().second;
    seq.c[ku] = std::move(found.front().second);
  }
  seq.rank = next_eta - 1;
  return seq;
}

bool ClassicalSeed::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ClassicalSeed classical_seed_and_gsv_check(const PoissonBracket& br,
                                           const PoissonPrimeSequence& seq) {
  const PoissonPresentation& p = br.presentation();
  const int n = p.n;
  const auto nu = static_cast<std::size_t>(n);
  const RationalMatrix w = poisson_omega(p);
  ClassicalSeed cs;
  cs.ex = seq.exchangeable();
  cs.omega.assign(nu, RationalVec(nu, Rational(0)));

  CheckResult lc{"log-canonical", true, ""};
  for (std::size_t k = 0; k < nu; ++k) {
    for (std::size_t l = 0; l < nu; ++l) {
      cs.omega[k][l] = omega_value(w, seq.ebar[k], seq.ebar[l]);
      if (l <= k) continue;
      const CPoly lhs = br(seq.y[k], seq.y[l]);
      const CPoly rhs = cpoly_multiply(seq.y[k], seq.y[l]).scaled(cs.omega[k][l]);
      if (!(lhs == rhs) && lc.passed) {
        lc.passed = false;
        lc.witness = "{y_" + std::to_string(k + 1) + ", y_" + std::to_string(l + 1) +
                     "} is not omega y_k y_l";
      }
    }
  }
  cs.checks.push_back(lc);

  const PoissonHStar hs = solve_poisson_h_star(p);
  auto eta = [&](int k) { return seq.eta[static_cast<std::size_t>(k)]; };
  auto ls = [&](int k) { return hs.lambda_star[static_cast<std::size_t>(k)]; };
  for (int k : cs.ex) cs.dstar.push_back(ls(k));
  CheckResult la{"la-isi", true, ""};
  for (int k : cs.ex) {
    for (int l = 0; l < n; ++l) {
      if (eta(k) != eta(l)) continue;
      if (seq.succ[static_cast<std::size_t>(l)] != kNoIndex && ls(k) != ls(l) && la.passed) {
        la.passed = false;
        la.witness = "lambda*_" + std::to_string(k + 1) + " != lambda*_" + std::to_string(l + 1);
      }
      if (seq.pred[static_cast<std::size_t>(l)] != kNoIndex && ls(k) != -p.lambda(l, l) &&
          la.passed) {
        la.passed = false;
        la.witness = "lambda*_" + std::to_string(k + 1) + " != -lambda_" + std::to_string(l + 1);
      }
    }
  }
  cs.checks.push_back(la);

  // Additive (B): positive integers d_n proportional to lambda*.
  CheckResult bc{"B", true, ""};
  std::map<int, Rational> mu;
  for (int k : cs.ex) mu.emplace(eta(k), ls(k));
  for (int e : seq.eta) cs.d.emplace(e, 1);
  int sign = 0;
  Integer den_lcm = 1;
  for (const auto& [e, m] : mu) {
    const int s = sgn(m);
    if (s == 0 || (sign != 0 && s != sign)) {
      bc.passed = false;
      bc.witness = "lambda* values on exchangeable level sets are zero or of mixed sign";
      break;
    }
    sign = s;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), m.get_den().get_mpz_t());
  }
  if (bc.passed && !mu.empty()) {
    Integer g = 0;
    std::map<int, Integer> scaled;
    for (const auto& [e, m] : mu) {
      Rational t = abs(m) * Rational(den_lcm);
      scaled[e] = t.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[e].get_mpz_t());
    }
    for (const auto& [e, v] : scaled) cs.d[e] = static_cast<int>(Integer(v / g).get_si());
    for (int k : cs.ex) {
      for (int l : cs.ex) {
        if (ls(k) * cs.d[eta(l)] != ls(l) * cs.d[eta(k)]) bc.passed = false;
      }
    }
  }
  cs.checks.push_back(bc);

  CheckResult exc{"exchange", true, ""};
  cs.b.assign(nu, IntVec(cs.ex.size(), 0));
  for (std::size_t col = 0; col < cs.ex.size() && exc.passed; ++col) {
    const int k = cs.ex[col];
    Matrix<Rational> a;
    std::vector<Rational> rhs;
    for (std::size_t m = 0; m < nu; ++m) {
      RationalVec row;
      for (std::size_t l = 0; l < nu; ++l) row.push_back(cs.omega[l][m]);
      a.push_back(row);
      rhs.push_back(static_cast<int>(m) == k ? ls(k) : Rational(0));
    }
    for (int j = 0; j < p.torus_rank; ++j) {
      RationalVec row;
      for (std::size_t l = 0; l < nu; ++l) {
        row.emplace_back(p.weight_of(seq.ebar[l])[static_cast<std::size_t>(j)]);
      }
      a.push_back(row);
      rhs.emplace_back(0);
    }
    const auto sol = solve_linear<Rational>(std::move(a), std::move(rhs), nu);
    if (!sol.unique(nu)) {
      exc.passed = false;
      exc.witness = "column " + std::to_string(k + 1) +
                    (sol.consistent ? ": solution not unique" : ": infeasible");
      break;
    }
    for (std::size_t l = 0; l < nu; ++l) {
      if (sol.x[l].get_den() != 1) {
        exc.passed = false;
        exc.witness = "column " + std::to_string(k + 1) + ": non-integral entry";
        break;
      }
      cs.b[l][col] = static_cast<int>(sol.x[l].get_num().get_si());
    }
  }
  if (!exc.passed) cs.b.clear();
  cs.checks.push_back(exc);
  return cs;
}

PoissonPresentation poisson_quantum_matrices(int m, int n) {
  if (m < 1 || n < 1) throw InvalidPresentation("matrices need m, n >= 1");
  PoissonPresentation p;
  p.n = m * n;
  p.torus_rank = m + n;
  const auto r = static_cast<std::size_t>(m + n);
  RationalMatrix hs;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      IntVec chi(r, 0);
      RationalVec h(r, Rational(0));
      chi[static_cast<std::size_t>(i - 1)] = 1;
      chi[static_cast<std::size_t>(m + j - 1)] = -1;
      h[static_cast<std::size_t>(i - 1)] = -1;
      h[static_cast<std::size_t>(m + j - 1)] = 1;
      p.weights.push_back(chi);
      p.h.push_back(h);
      for (auto& x : h) x = -x;
      hs.push_back(h);
      p.names.push_back("t" + std::to_string(i) + std::to_string(j));
    }
  }
  p.hstar = hs;
  // {t_kl, t_ij} = -2 t_il t_kj for i < k, j < l.
  for (int i = 1; i <= m; ++i) {
    for (int k = i + 1; k <= m; ++k) {
      for (int j = 1; j <= n; ++j) {
        for (int l = j + 1; l <= n; ++l) {
          Exponent e(static_cast<std::size_t>(p.n), 0);
          e[static_cast<std::size_t>(qmatrix_index(n, i, l))] = 1;
          e[static_cast<std::size_t>(qmatrix_index(n, k, j))] = 1;
          p.delta.emplace(std::make_pair(qmatrix_index(n, k, l), qmatrix_index(n, i, j)),
                          CPoly::monomial(e, Rational(-2)));
        }
      }
    }
  }
  return p;
}

}  // namespace qnca
