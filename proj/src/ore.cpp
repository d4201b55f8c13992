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

#include "qnca/ore.hpp"

#include <sstream>

#include "qnca/error.hpp"
#include "qnca/linsolve.hpp"

namespace qnca {

namespace {

std::string gen_label(int k) { return "x" + std::to_string(k + 1); }

}  // namespace

PbwAlgebra::PbwAlgebra(CGLPresentation p, std::size_t step_cap)
    : p_(std::move(p)), step_cap_(step_cap) {
  p_.check_shape();
}

const NCPoly& PbwAlgebra::times_generator(const Exponent& a, int j) const {
  Exponent key = a;
  key.push_back(j);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (++steps_ > step_cap_) {
    throw InvalidPresentation("rewriting step cap exceeded; the presentation does not terminate");
  }
  const int n = p_.n;
  int m = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)] > 0) {
      m = i;
      break;
    }
  }
  NCPoly result(n);
  if (m <= j) {
    Exponent e = a;
    ++e[static_cast<std::size_t>(j)];
    result = NCPoly::monomial(e);
  } else {
    Exponent rest = a;
    --rest[static_cast<std::size_t>(m)];
    const NCPoly inner = times_generator(rest, j);
    result = inner.shifted(unit_vector(n, m)).scaled(p_.lambda(m, j));
    auto d = p_.delta.find({m, j});
    if (d != p_.delta.end()) {
      for (const auto& [de, dc] : d->second.terms()) {
        result += monomial_product(rest, de).scaled(dc);
      }
    }
  }
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

NCPoly PbwAlgebra::poly_times_generator(const NCPoly& a, int j) const {
  NCPoly out(p_.n);
  for (const auto& [e, c] : a.terms()) out += times_generator(e, j).scaled(c);
  return out;
}

NCPoly PbwAlgebra::monomial_product(const Exponent& a, const Exponent& b) const {
  NCPoly cur = NCPoly::monomial(a);
  for (int g = 0; g < p_.n; ++g) {
    for (int t = 0; t < b[static_cast<std::size_t>(g)]; ++t) cur = poly_times_generator(cur, g);
  }
  return cur;
}

NCPoly PbwAlgebra::word_product(const std::vector<int>& word) const {
  NCPoly cur = one();
  for (int g : word) cur = poly_times_generator(cur, g);
  return cur;
}

NCPoly PbwAlgebra::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly out(p_.n);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out += monomial_product(ea, eb).scaled(ca * cb);
    }
  }
  return out;
}

NCPoly PbwAlgebra::power(const NCPoly& a, int n) const {
  NCPoly out = one();
  for (int i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

NCPoly PbwAlgebra::sigma(int k, const NCPoly& b) const {
  NCPoly out(p_.n);
  for (const auto& [e, c] : b.terms()) {
    int vexp = 0;
    for (int i = 0; i < p_.n; ++i) vexp += e[static_cast<std::size_t>(i)] * p_.lambda_vexp(k, i);
    out.add_term(e, c * QPower{vexp});
  }
  return out;
}

NCPoly PbwAlgebra::skew_derivation(int k, const NCPoly& b) const {
  const int n = p_.n;
  NCPoly out(n);
  for (const auto& [e, c] : b.terms()) {
    for (int i = k; i < n; ++i) {
      if (e[static_cast<std::size_t>(i)] != 0) {
        throw InvalidPresentation("skew derivation delta_" + std::to_string(k + 1) +
                                  " applied to an element involving " + gen_label(i));
      }
    }
    // Walk the PBW word; position t contributes sigma(prefix) delta(w_t) suffix.
    Exponent prefix(static_cast<std::size_t>(n), 0);
    Exponent suffix = e;
    int prefix_vexp = 0;
    for (int g = 0; g < k; ++g) {
      for (int t = 0; t < e[static_cast<std::size_t>(g)]; ++t) {
        --suffix[static_cast<std::size_t>(g)];
        auto d = p_.delta.find({k, g});
        if (d != p_.delta.end()) {
          NCPoly left(n);
          for (const auto& [de, dc] : d->second.terms()) {
            left += monomial_product(prefix, de).scaled(dc);
          }
          out += multiply(left, NCPoly::monomial(suffix)).scaled(c * QPower{prefix_vexp});
        }
        ++prefix[static_cast<std::size_t>(g)];
        prefix_vexp += p_.lambda_vexp(k, g);
      }
    }
  }
  return out;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool ValidationReport::cgl_ok() const {
  for (const auto& c : checks) {
    if (!c.passed && c.name != "symmetry") return false;
  }
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidationReport validate_cgl(const PbwAlgebra& alg, ValidationCaps caps) {
  const CGLPresentation& p = alg.presentation();
  const int n = p.n;
  ValidationReport report;
  report.nilpotency_cap = caps.nilpotency;

  CheckResult homog{"homogeneity", true, ""};
  for (const auto& [kl, poly] : p.delta) {
    const auto [k, l] = kl;
    IntVec want = p.weight_of(unit_vector(n, k) + unit_vector(n, l));
    for (const auto& [e, c] : poly.terms()) {
      if (p.weight_of(e) != want) {
        homog.passed = false;
        homog.witness = "delta_" + std::to_string(k + 1) + "(x" + std::to_string(l + 1) +
                        ") has a term of the wrong torus weight";
        break;
      }
    }
    if (!homog.passed) break;
  }
  report.checks.push_back(homog);

  CheckResult eig{"eigenvalue", true, ""};
  for (int k = 0; k < n; ++k) {
    if (p.lambda_vexp(k, k) == 0) {
      eig.passed = false;
      eig.witness = "lambda_" + std::to_string(k + 1) + " = 1 is a root of unity";
      break;
    }
  }
  report.checks.push_back(eig);

  CheckResult nilp{"nilpotency", true, ""};
  try {
    for (int k = 1; k < n && nilp.passed; ++k) {
      for (int l = 0; l < k && nilp.passed; ++l) {
        NCPoly u = alg.generator(l);
        int it = 0;
        while (!u.is_zero() && it < caps.nilpotency) {
          u = alg.skew_derivation(k, u);
          ++it;
        }
        if (!u.is_zero()) {
          nilp.passed = false;
          nilp.witness = "delta_" + std::to_string(k + 1) + "^" + std::to_string(caps.nilpotency) +
                         "(x" + std::to_string(l + 1) + ") != 0";
        }
      }
    }
  } catch (const InvalidPresentation& e) {
    nilp.passed = false;
    nilp.witness = e.what();
  }
  report.checks.push_back(nilp);

  CheckResult assoc{"associativity", true, ""};
  try {
    for (int k = 2; k < n && assoc.passed; ++k) {
      for (int l = 1; l < k && assoc.passed; ++l) {
        for (int m = 0; m < l && assoc.passed; ++m) {
          const NCPoly xk = alg.generator(k), xl = alg.generator(l), xm = alg.generator(m);
          const NCPoly left = alg.multiply(alg.multiply(xk, xl), xm);
          const NCPoly right = alg.multiply(xk, alg.multiply(xl, xm));
          if (!(left == right)) {
            assoc.passed = false;
            assoc.witness = "(x" + std::to_string(k + 1) + " x" + std::to_string(l + 1) + ") x" +
                            std::to_string(m + 1) + " != x" + std::to_string(k + 1) + " (x" +
                            std::to_string(l + 1) + " x" + std::to_string(m + 1) + ")";
          }
        }
      }
    }
  } catch (const InvalidPresentation& e) {
    assoc.passed = false;
    assoc.witness = e.what();
  }
  report.checks.push_back(assoc);

  CheckResult sym{"symmetry", true, ""};
  for (const auto& [kl, poly] : p.delta) {
    const auto [k, l] = kl;
    for (const auto& [e, c] : poly.terms()) {
      for (int i = 0; i <= l; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) {
          sym.passed = false;
          sym.witness = "x" + std::to_string(k + 1) + " x" + std::to_string(l + 1) +
                        " - lambda x" + std::to_string(l + 1) + " x" + std::to_string(k + 1) +
                        " involves x" + std::to_string(i + 1);
        }
      }
      if (!sym.passed) break;
    }
    if (!sym.passed) break;
  }
  if (sym.passed) {
    try {
      (void)solve_h_star(p);
    } catch (const MathError& e) {
      sym.passed = false;
      sym.witness = e.what();
    }
  }
  report.checks.push_back(sym);
  return report;
}

bool HStarSolution::unique() const {
  for (bool d : determined) {
    if (!d) return false;
  }
  return true;
}

namespace {

int int_of(const Integer& z) {
  if (!z.fits_sint_p()) throw MathError("torus exponent does not fit in an int");
  return static_cast<int>(z.get_si());
}

}  // namespace

HStarSolution solve_h_star(const CGLPresentation& p) {
  const int n = p.n;
  const auto r = static_cast<std::size_t>(p.torus_rank);
  HStarSolution out;
  out.hstar.assign(static_cast<std::size_t>(n), IntVec(r, 0));
  out.lambda_star_q.assign(static_cast<std::size_t>(n), 0);
  out.determined.assign(static_cast<std::size_t>(n), false);

  for (int k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    Matrix<Integer> a;
    std::vector<Integer> b;
    Matrix<Rational> aq;
    for (int l = k + 1; l < n; ++l) {
      const auto& chi = p.weights[static_cast<std::size_t>(l)];
      std::vector<Integer> row(chi.begin(), chi.end());
      a.push_back(row);
      aq.emplace_back(chi.begin(), chi.end());
      b.emplace_back(-dot(p.h[static_cast<std::size_t>(l)], p.weights[ku]));
    }
    const auto& chik = p.weights[ku];
    const std::size_t base_rank = matrix_rank(aq, r);
    aq.emplace_back(chik.begin(), chik.end());
    out.determined[ku] = matrix_rank(aq, r) == base_rank;

    if (p.hstar) {
      const IntVec& given = (*p.hstar)[ku];
      for (std::size_t i = 0; i < a.size(); ++i) {
        Integer lhs = 0;
        for (std::size_t j = 0; j < r; ++j) lhs += a[i][j] * given[j];
        if (lhs != b[i]) {
          throw MathError("supplied h*_" + std::to_string(k + 1) + " does not satisfy h*_k . x_l = "
                          "lambda_lk^-1 x_l for l = " + std::to_string(k + 2 + static_cast<int>(i)));
        }
      }
      out.hstar[ku] = given;
    } else {
      auto sol = solve_integer_system(a, b, r);
      if (!sol) {
        throw MathError("no torus element h*_" + std::to_string(k + 1) +
                        " exists; the presentation is not symmetric");
      }
      std::vector<Integer> chosen = sol->particular;
      if (!out.determined[ku]) {
        auto a2 = a;
        auto b2 = b;
        a2.emplace_back(chik.begin(), chik.end());
        b2.emplace_back(-dot(p.h[ku], chik));
        if (auto pref = solve_integer_system(a2, b2, r)) {
          chosen = pref->particular;
        } else {
          Integer pair = 0;
          for (std::size_t j = 0; j < r; ++j) pair += chosen[j] * chik[j];
          if (sgn(pair) == 0) {
            for (const auto& kv : sol->kernel) {
              Integer kp = 0;
              for (std::size_t j = 0; j < r; ++j) kp += kv[j] * chik[j];
              if (sgn(kp) != 0) {
                for (std::size_t j = 0; j < r; ++j) chosen[j] += kv[j];
                break;
              }
            }
          }
        }
      }
      for (std::size_t j = 0; j < r; ++j) out.hstar[ku][j] = int_of(chosen[j]);
    }
    out.lambda_star_q[ku] = dot(out.hstar[ku], chik);
    if (out.lambda_star_q[ku] == 0) {
      throw MathError("lambda*_" + std::to_string(k + 1) +
                      " = 1 is a root of unity; the reverse presentation is not CGL");
    }
  }
  return out;
}

}  // namespace qnca
