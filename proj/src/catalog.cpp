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

#include "qnca/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>
#include <set>

#include "qnca/error.hpp"
#include "qnca/primes.hpp"

namespace qnca {

CGLPresentation quantum_matrices(int m, int n, bool with_hstar) {
  if (m < 1 || n < 1) throw InvalidPresentation("quantum matrices need m, n >= 1");
  CGLPresentation p;
  p.n = m * n;
  p.torus_rank = m + n;
  const auto r = static_cast<std::size_t>(m + n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      IntVec chi(r, 0);
      IntVec h(r, 0);
      chi[static_cast<std::size_t>(i - 1)] = 1;
      chi[static_cast<std::size_t>(m + j - 1)] = -1;
      h[static_cast<std::size_t>(i - 1)] = -1;
      h[static_cast<std::size_t>(m + j - 1)] = 1;
      p.weights.push_back(chi);
      p.h.push_back(h);
      p.names.push_back("t" + std::to_string(i) + std::to_string(j));
    }
  }
  if (with_hstar) {
    IntMatrix hs = p.h;
    for (auto& row : hs) {
      for (int& x : row) x = -x;
    }
    p.hstar = hs;
  }
  // t_kl t_ij = t_ij t_kl - (q - q^-1) t_il t_kj for i < k, j < l.
  const LaurentScalar coeff = LaurentScalar::monomial(-1, 2) + LaurentScalar::monomial(1, -2);
  for (int i = 1; i <= m; ++i) {
    for (int k = i + 1; k <= m; ++k) {
      for (int j = 1; j <= n; ++j) {
        for (int l = j + 1; l <= n; ++l) {
          Exponent e(static_cast<std::size_t>(p.n), 0);
          e[static_cast<std::size_t>(qmatrix_index(n, i, l))] = 1;
          e[static_cast<std::size_t>(qmatrix_index(n, k, j))] = 1;
          p.delta.emplace(std::make_pair(qmatrix_index(n, k, l), qmatrix_index(n, i, j)),
                          NCPoly::monomial(e, coeff));
        }
      }
    }
  }
  return p;
}

NCPoly quantum_minor(const PbwAlgebra& alg, int m, int n, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw MathError("quantum minor needs |I| = |J|");
  for (int i : rows) {
    if (i < 1 || i > m) throw MathError("row index out of range");
  }
  for (int j : cols) {
    if (j < 1 || j > n) throw MathError("column index out of range");
  }
  const std::size_t k = rows.size();
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  NCPoly out(alg.n());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (sigma[a] > sigma[b]) ++inversions;
      }
    }
    std::vector<int> word;
    for (std::size_t a = 0; a < k; ++a) {
      word.push_back(qmatrix_index(n, rows[a], cols[static_cast<std::size_t>(sigma[a])]));
    }
    const LaurentScalar c =
        LaurentScalar::monomial(inversions % 2 == 0 ? 1 : -1, 2 * inversions);
    out += alg.word_product(word).scaled(c);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

NCPoly solid_minor(const PbwAlgebra& alg, int m, int n, int i, int j) {
  const int len = std::min(i, j);
  std::vector<int> rows, cols;
  for (int t = len - 1; t >= 0; --t) {
    rows.push_back(i - t);
    cols.push_back(j - t);
  }
  return quantum_minor(alg, m, n, rows, cols);
}

namespace {

void link(IntMatrix& c, int i, int j, int cij, int cji) {
  c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cij;
  c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = cji;
}

}  // namespace

CartanData CartanData::make(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  const bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
                  (type == 'C' && rank >= 2) || (type == 'D' && rank >= 4) ||
                  (type == 'E' && rank >= 6 && rank <= 8) || (type == 'F' && rank == 4) ||
                  (type == 'G' && rank == 2);
  if (!ok) throw ParseError("unknown Cartan type " + std::string(1, type) + std::to_string(rank));
  CartanData cd;
  cd.type = type;
  cd.r = rank;
  const auto r = static_cast<std::size_t>(rank);
  cd.c.assign(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) cd.c[i][i] = 2;
  cd.d.assign(r, 1);
  switch (type) {
    case 'A':
      for (int i = 1; i < rank; ++i) link(cd.c, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 1; i < rank - 1; ++i) link(cd.c, i, i + 1, -1, -1);
      link(cd.c, rank - 1, rank, -1, -2);
      for (int i = 0; i < rank - 1; ++i) cd.d[static_cast<std::size_t>(i)] = 2;
      break;
    case 'C':
      for (int i = 1; i < rank - 1; ++i) link(cd.c, i, i + 1, -1, -1);
      link(cd.c, rank - 1, rank, -2, -1);
      cd.d[r - 1] = 2;
      break;
    case 'D':
      for (int i = 1; i < rank - 1; ++i) link(cd.c, i, i + 1, -1, -1);
      link(cd.c, rank - 2, rank, -1, -1);
      break;
    case 'E':
      link(cd.c, 1, 3, -1, -1);
      link(cd.c, 2, 4, -1, -1);
      for (int i = 3; i < rank; ++i) link(cd.c, i, i + 1, -1, -1);
      break;
    case 'F':
      link(cd.c, 1, 2, -1, -1);
      link(cd.c, 2, 3, -1, -2);
      link(cd.c, 3, 4, -1, -1);
      cd.d = {2, 2, 1, 1};
      break;
    case 'G':
      link(cd.c, 1, 2, -3, -1);
      cd.d = {1, 3};
      break;
    default:
      break;
  }
  return cd;
}

CartanData CartanData::from_string(const std::string& s) {
  std::string t;
  for (char ch : s) {
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0]))) {
    throw ParseError("bad Cartan type '" + s + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i])) || rank > 1000) {
      throw ParseError("bad Cartan type '" + s + "'");
    }
    rank = rank * 10 + (t[i] - '0');
  }
  return make(t[0], rank);
}

ReducedWordData word_data(const std::vector<int>& word) {
  ReducedWordData d;
  d.word = word;
  const auto n = word.size();
  d.kminus.assign(n, kNoIndex);
  d.kplus.assign(n, kNoIndex);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l-- > 0;) {
      if (word[l] == word[k]) {
        d.kminus[k] = static_cast<int>(l);
        d.kplus[l] = static_cast<int>(k);
        break;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (d.kminus[k] != kNoIndex) d.ex.push_back(static_cast<int>(k));
  }
  return d;
}

namespace {

void check_letters(const CartanData& cd, const std::vector<int>& word) {
  for (int i : word) {
    if (i < 1 || i > cd.r) {
      throw MathError("letter " + std::to_string(i) + " out of range for " + cd.name());
    }
  }
}

}  // namespace

SchubertMatrix schubert_exchange_matrix(const CartanData& cd, const std::vector<int>& word) {
  check_letters(cd, word);
  SchubertMatrix out;
  out.data = word_data(word);
  const auto& d = out.data;
  const int n = static_cast<int>(word.size());
  out.b.assign(static_cast<std::size_t>(n), IntVec(d.ex.size(), 0));
  // -infinity as kNoIndex = -1 sits below every index.
  auto p = [&](int k) { return d.kminus[static_cast<std::size_t>(k)]; };
  auto s = [&](int k) { return d.kplus[static_cast<std::size_t>(k)]; };
  for (std::size_t col = 0; col < d.ex.size(); ++col) {
    const int l = d.ex[col];
    for (int k = 0; k < n; ++k) {
      const int ck = cd.entry(word[static_cast<std::size_t>(k)], word[static_cast<std::size_t>(l)]);
      int b = 0;
      if (k == p(l)) {
        b = 1;
      } else if (k == s(l)) {
        b = -1;
      } else if (p(k) < p(l) && p(l) < k && k < l) {
        b = ck;
      } else if (p(l) < p(k) && p(k) < l && l < k) {
        b = -ck;
      }
      out.b[static_cast<std::size_t>(k)][col] = b;
    }
  }
  return out;
}

BZMatrix bz_exchange_matrix(const CartanData& cd, const std::vector<int>& word_w,
                            const std::vector<int>& word_v) {
  check_letters(cd, word_w);
  check_letters(cd, word_v);
  BZMatrix out;
  BZData& d = out.data;
  d.r = cd.r;
  d.m = static_cast<int>(word_v.size());
  d.n = static_cast<int>(word_w.size());
  const int total = d.r + d.m + d.n;
  for (int k = 1; k <= d.r; ++k) d.eta.push_back(k);
  for (int i : word_v) d.eta.push_back(i);
  for (int i : word_w) d.eta.push_back(i);
  for (int k = 0; k < total; ++k) d.eps.push_back(k < d.r + d.m ? 1 : -1);
  const ReducedWordData wd = word_data(d.eta);
  d.pred = wd.kminus;
  d.succ = wd.kplus;
  for (int k = 0; k < total; ++k) {
    if (k < d.r || d.succ[static_cast<std::size_t>(k)] != kNoIndex) d.ex.push_back(k);
  }

  // Positions compared as 1-based integers with +infinity above all.
  auto s = [&](int k) {
    const int v = d.succ[static_cast<std::size_t>(k)];
    return v == kNoIndex ? INT_MAX : v + 1;
  };
  auto eps = [&](int k) { return d.eps[static_cast<std::size_t>(k)]; };
  auto eps_at = [&](int pos) {  // pos 1-based, finite
    return d.eps[static_cast<std::size_t>(pos - 1)];
  };
  const int rm = d.r + d.m;
  out.b.assign(static_cast<std::size_t>(total), IntVec(d.ex.size(), 0));
  for (std::size_t col = 0; col < d.ex.size(); ++col) {
    const int l0 = d.ex[col];
    const int l = l0 + 1;
    for (int k0 = 0; k0 < total; ++k0) {
      const int k = k0 + 1;
      const int c = cd.entry(d.eta[static_cast<std::size_t>(k0)], d.eta[static_cast<std::size_t>(l0)]);
      int b = 0;
      if (k0 == d.pred[static_cast<std::size_t>(l0)]) {
        b = -eps(l0);
      } else if ((k < l && l < s(k0) && s(k0) < s(l0) && eps(l0) == eps_at(s(k0))) ||
                 (k < l && l <= rm && rm < s(l0) && s(l0) < s(k0))) {
        b = -eps(l0) * c;
      } else if ((l < k && k < s(l0) && s(l0) < s(k0) && eps(k0) == eps_at(s(l0))) ||
                 (l < k && k <= rm && rm < s(k0) && s(k0) < s(l0))) {
        b = eps(k0) * c;
      } else if (k0 == d.succ[static_cast<std::size_t>(l0)]) {
        b = eps(k0);
      }
      out.b[static_cast<std::size_t>(k0)][col] = b;
    }
  }
  return out;
}

bool is_reduced_type_a(const CartanData& cd, const std::vector<int>& word) {
  if (cd.type != 'A') throw MathError("reduced-word check is only available in type A");
  check_letters(cd, word);
  std::vector<int> perm(static_cast<std::size_t>(cd.r + 1));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i : word) std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) ++inversions;
    }
  }
  return inversions == word.size();
}

}  // namespace qnca
