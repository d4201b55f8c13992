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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "qnca/error.hpp"

namespace oracle {

using qnca::Exponent;
using qnca::LaurentScalar;
using qnca::QPower;

NCPoly quantum_det(const qnca::PbwAlgebra& alg, int n, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  const int nv = alg.n();
  if (rows.empty()) return alg.one();
  NCPoly out(nv);
  const std::vector<int> rest_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> rest_cols;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c != j) rest_cols.push_back(cols[c]);
    }
    const NCPoly t = alg.generator((rows[0] - 1) * n + cols[j] - 1);
    NCPoly term = alg.multiply(t, quantum_det(alg, n, rest_rows, rest_cols));
    LaurentScalar sign = (j % 2 == 0) ? LaurentScalar(1) : LaurentScalar(-1);
    term = term.scaled(sign * LaurentScalar(QPower::q(static_cast<int>(j))));
    out += term;
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> solid_window(int i, int j) {
  const int s = std::min(i, j);
  std::vector<int> r, c;
  for (int t = 1; t <= s; ++t) {
    r.push_back(i - s + t);
    c.push_back(j - s + t);
  }
  return {r, c};
}

static int sign(int x) { return (x > 0) - (x < 0); }

int qmatrix_omega_qexp(int n, int a, int b) {
  const int i = a / n + 1, j = a % n + 1;
  const int k = b / n + 1, l = b % n + 1;
  return (j == l ? sign(k - i) : 0) + (i == k ? sign(l - j) : 0);
}

int qmatrix_omega_vexp(int n, const IntVec& f, const IntVec& g) {
  int total = 0;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      total += f[a] * g[b] * 2 * qmatrix_omega_qexp(n, static_cast<int>(a), static_cast<int>(b));
    }
  }
  return total;
}

int qmatrix_b_entry(int i, int j, int k, int l) {
  if ((i == k && j == l - 1) || (j == l && i == k - 1) || (i == k + 1 && j == l + 1)) return 1;
  if ((i == k && j == l + 1) || (j == l && i == k + 1) || (i == k - 1 && j == l - 1)) return -1;
  return 0;
}

CaseListMatrix schubert(const qnca::CartanData& cd, const std::vector<int>& word) {
  const int N = static_cast<int>(word.size());
  // 1-based arrays, index 0 unused
  std::vector<int> i(N + 1), minus(N + 1, 0), plus(N + 1, N + 1);
  for (int k = 1; k <= N; ++k) i[k] = word[k - 1];
  for (int k = 1; k <= N; ++k) {
    for (int l = k - 1; l >= 1; --l) {
      if (i[l] == i[k]) {
        minus[k] = l;
        break;
      }
    }
    for (int l = k + 1; l <= N; ++l) {
      if (i[l] == i[k]) {
        plus[k] = l;
        break;
      }
    }
  }
  CaseListMatrix out;
  for (int k = 1; k <= N; ++k) {
    if (minus[k] != 0) out.ex.push_back(k);
  }
  out.b.assign(N, IntVec(out.ex.size(), 0));
  for (std::size_t c = 0; c < out.ex.size(); ++c) {
    const int l = out.ex[c];
    for (int k = 1; k <= N; ++k) {
      int v = 0;
      if (k == minus[l]) {
        v = 1;
      } else if (k == plus[l]) {
        v = -1;
      } else if (minus[k] < minus[l] && minus[l] < k && k < l) {
        v = cd.entry(i[k], i[l]);
      } else if (minus[l] < minus[k] && minus[k] < l && l < k) {
        v = -cd.entry(i[k], i[l]);
      }
      out.b[k - 1][c] = v;
    }
  }
  return out;
}

CaseListMatrix double_bruhat(const qnca::CartanData& cd, const std::vector<int>& w,
                             const std::vector<int>& v) {
  const int r = cd.r, M = static_cast<int>(v.size()), N = static_cast<int>(w.size());
  const int T = r + M + N;
  std::vector<int> eta(T + 1), eps(T + 1), p(T + 1, 0), s(T + 1, T + 1);
  for (int k = 1; k <= T; ++k) {
    if (k <= r) {
      eta[k] = k;
    } else if (k <= r + M) {
      eta[k] = v[k - r - 1];
    } else {
      eta[k] = w[k - r - M - 1];
    }
    eps[k] = k <= r + M ? 1 : -1;
  }
  for (int k = 1; k <= T; ++k) {
    for (int l = k - 1; l >= 1; --l) {
      if (eta[l] == eta[k]) {
        p[k] = l;
        break;
      }
    }
    for (int l = k + 1; l <= T; ++l) {
      if (eta[l] == eta[k]) {
        s[k] = l;
        break;
      }
    }
  }
  CaseListMatrix out;
  for (int k = 1; k <= T; ++k) {
    if (k <= r || s[k] != T + 1) out.ex.push_back(k);
  }
  out.b.assign(T, IntVec(out.ex.size(), 0));
  const int inf = T + 1;
  auto eps_at = [&](int k) { return k >= 1 && k <= T ? eps[k] : 0; };
  for (std::size_t c = 0; c < out.ex.size(); ++c) {
    const int l = out.ex[c];
    for (int k = 1; k <= T; ++k) {
      int val = 0;
      const int ckl = cd.entry(eta[k], eta[l]);
      if (k == p[l]) {
        val = -eps[l];
      } else if ((k < l && l < s[k] && s[k] < s[l] && s[k] != inf && eps[l] == eps_at(s[k])) ||
                 (k < l && l <= r + M && r + M < s[l] && s[l] < s[k])) {
        val = -eps[l] * ckl;
      } else if ((l < k && k < s[l] && s[l] < s[k] && s[l] != inf && eps[k] == eps_at(s[l])) ||
                 (l < k && k <= r + M && r + M < s[k] && s[k] < s[l])) {
        val = eps[k] * ckl;
      } else if (k == s[l]) {
        val = eps[k];
      }
      out.b[k - 1][c] = val;
    }
  }
  return out;
}

std::vector<std::vector<int>> xi_brute(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    int lo = perm.empty() ? 0 : perm[0], hi = lo;
    for (std::size_t t = 1; t < perm.size() && ok; ++t) {
      lo = std::min(lo, perm[t]);
      hi = std::max(hi, perm[t]);
      ok = hi - lo == static_cast<int>(t);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CPoly semiclassical_bracket(const qnca::PbwAlgebra& alg, int k, int l) {
  const NCPoly comm = alg.multiply(alg.generator(k), alg.generator(l)) -
                      alg.multiply(alg.generator(l), alg.generator(k));
  CPoly out(alg.n());
  for (const auto& [e, c] : comm.terms()) {
    if (c.eval_at_one() != 0) throw qnca::MathError("commutator does not vanish at q = 1");
    out.add_term(e, c.derivative_at_one() / 2);
  }
  return out;
}

CPoly classical_det(int n, const std::vector<int>& rows, const std::vector<int>& cols, int nvars) {
  std::vector<int> sigma(cols.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  CPoly out(nvars);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
      for (std::size_t b = a + 1; b < sigma.size(); ++b) inv += sigma[a] > sigma[b];
    }
    Exponent e(static_cast<std::size_t>(nvars), 0);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      ++e[static_cast<std::size_t>((rows[a] - 1) * n + cols[static_cast<std::size_t>(sigma[a])] - 1)];
    }
    out.add_term(e, qnca::Rational(inv % 2 ? -1 : 1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

bool compatible(const IntMatrix& b, const std::vector<int>& ex, const IntMatrix& lambda,
                const std::vector<int>& dstar) {
  const std::size_t n = lambda.size();
  for (std::size_t c = 0; c < ex.size(); ++c) {
    if (dstar[c] == 0) return false;
    for (std::size_t m = 0; m < n; ++m) {
      long s = 0;
      for (std::size_t l = 0; l < n; ++l) s += long{b[l][c]} * lambda[l][m];
      if (s != (static_cast<int>(m) == ex[c] ? dstar[c] : 0)) return false;
    }
  }
  return true;
}

std::optional<IntVec> homogeneous_weight(const qnca::CGLPresentation& p, const NCPoly& x) {
  std::optional<IntVec> w;
  for (const auto& [e, c] : x.terms()) {
    IntVec we(static_cast<std::size_t>(p.torus_rank), 0);
    for (int k = 0; k < p.n; ++k) {
      for (int t = 0; t < p.torus_rank; ++t) {
        we[static_cast<std::size_t>(t)] +=
            e[static_cast<std::size_t>(k)] * p.weights[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
      }
    }
    if (w && *w != we) return std::nullopt;
    w = we;
  }
  return w;
}

}  // namespace oracle
