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

#include "qnca/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnca/catalog.hpp"
#include "qnca/error.hpp"
#include "qnca/io.hpp"
#include "qnca/mutation.hpp"
#include "qnca/poisson.hpp"
#include "qnca/primes.hpp"
#include "qnca/seeds.hpp"

namespace qnca {

using Json = nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad integer list '" + text + "'");
    }
    if (pos != item.size()) throw ParseError("bad integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

namespace {

struct Loaded {
  std::string label;
  std::optional<CGLPresentation> cgl;
  std::optional<PoissonPresentation> poisson;
};

std::pair<int, int> parse_shape(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw ParseError("matrix shape must look like MxN, got '" + s + "'");
  const auto v = parse_int_list(s.substr(0, x) + "," + s.substr(x + 1));
  if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw ParseError("bad matrix shape '" + s + "'");
  return {v[0], v[1]};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Loaded load_algebra(const JobConfig& c) {
  Loaded l;
  if (!c.preset.empty() && !c.input.empty()) throw ParseError("give either --preset or --input");
  if (!c.input.empty()) {
    const std::string text = read_file(c.input);
    l.label = c.input;
    if (presentation_flavor(text) == "poisson") {
      l.poisson = read_poisson_presentation(text);
    } else {
      l.cgl = read_presentation(text);
    }
    return l;
  }
  if (c.preset.empty()) throw ParseError("an algebra is required (--preset or --input)");
  const auto parts = split(c.preset, ':');
  if (parts[0] == "qmatrix" && parts.size() == 2) {
    const auto [m, n] = parse_shape(parts[1]);
    l.cgl = quantum_matrices(m, n);
    l.label = "R_q[M_" + std::to_string(m) + "x" + std::to_string(n) + "]";
  } else if (parts[0] == "poisson-qmatrix" && parts.size() == 2) {
    const auto [m, n] = parse_shape(parts[1]);
    l.poisson = poisson_quantum_matrices(m, n);
    l.label = "semiclassical M_" + std::to_string(m) + "x" + std::to_string(n);
  } else {
    throw ParseError("preset '" + c.preset + "' does not name an algebra");
  }
  return l;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string index_set(const std::vector<int>& zero_based) {
  std::vector<std::string> s;
  for (int k : zero_based) s.push_back(std::to_string(k + 1));
  return "{" + join(s) + "}";
}

Json one_based(const std::vector<int>& zero_based) {
  Json j = Json::array();
  for (int k : zero_based) j.push_back(k + 1);
  return j;
}

// Sentinels: 0 for -infinity, N+1 for +infinity.
Json link_array(const IntVec& v, int n, bool is_pred) {
  Json j = Json::array();
  for (int x : v) j.push_back(x == kNoIndex ? (is_pred ? 0 : n + 1) : x + 1);
  return j;
}

std::string link_text(const IntVec& v, bool is_pred) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(x == kNoIndex ? (is_pred ? "-inf" : "+inf") : std::to_string(x + 1));
  return "[" + join(s) + "]";
}

std::string int_list_text(const IntVec& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return "[" + join(s) + "]";
}

/// Matrix with row legend k=.. and column legend from `col_labels`.
void print_matrix(std::ostream& out, const IntMatrix& m, const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels) {
  std::size_t w = 3;
  for (const auto& s : col_labels) w = std::max(w, s.size() + 1);
  for (const auto& row : m) {
    for (int x : row) w = std::max(w, std::to_string(x).size() + 1);
  }
  std::size_t lw = 0;
  for (const auto& s : row_labels) lw = std::max(lw, s.size());
  out << "  " << std::string(lw, ' ');
  for (const auto& s : col_labels) out << std::setw(static_cast<int>(w + 1)) << s;
  out << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  " << std::left << std::setw(static_cast<int>(lw)) << row_labels[i] << std::right;
    for (int x : m[i]) out << std::setw(static_cast<int>(w + 1)) << x;
    out << "\n";
  }
}

std::vector<std::string> labels(const std::string& prefix, const std::vector<int>& zero_based) {
  std::vector<std::string> s;
  for (int k : zero_based) s.push_back(prefix + std::to_string(k + 1));
  return s;
}

std::vector<std::string> range_labels(const std::string& prefix, int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  return labels(prefix, idx);
}

Json matrix_json(const IntMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json header(const std::string& command, const Loaded& l) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["algebra"] = l.label;
  return j;
}

CGLPresentation maybe_reindex(const JobConfig& c, const CGLPresentation& p) {
  if (c.tau.empty()) return p;
  std::vector<int> tau;
  for (int t : c.tau) tau.push_back(t - 1);
  const PbwAlgebra base(p);
  return tau_presentation(base, tau).presentation;
}

ScalarStyle text_style(const JobConfig& c) {
  return c.format == OutputFormat::kMachine ? ScalarStyle::kV : ScalarStyle::kQIfEven;
}

// Names used in output: generator names in text, x1..xN in machine form.
std::vector<std::string> out_names(const JobConfig& c, const std::vector<std::string>& names) {
  return c.format == OutputFormat::kMachine ? std::vector<std::string>{} : names;
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json j = Json::array();
  for (const auto& ch : checks) {
    j.push_back({{"name", ch.name}, {"passed", ch.passed}, {"witness", ch.witness}});
  }
  return j;
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const auto& ch : checks) {
    out << "  " << std::left << std::setw(14) << ch.name << std::right
        << (ch.passed ? "pass" : "FAIL");
    if (!ch.passed && !ch.witness.empty()) out << "  (" << ch.witness << ")";
    out << "\n";
  }
}

int cmd_validate(const JobConfig& c, const Loaded& l, std::ostream& out) {
  ValidationReport rep;
  ValidationCaps caps{c.nilpotency_cap};
  if (l.poisson) {
    rep = validate_poisson(PoissonBracket(*l.poisson), caps);
  } else {
    rep = validate_cgl(PbwAlgebra(maybe_reindex(c, *l.cgl)), caps);
  }
  // Reindexed presentations are CGL extensions but need not be symmetric.
  const bool ok = c.tau.empty() ? rep.ok() : rep.cgl_ok();
  if (c.format == OutputFormat::kMachine) {
    Json j = header("validate", l);
    if (!c.tau.empty()) j["tau"] = c.tau;
    j["nilpotency_cap"] = rep.nilpotency_cap;
    j["ok"] = ok;
    j["symmetric"] = rep.find("symmetry") == nullptr || rep.find("symmetry")->passed;
    j["checks"] = checks_json(rep.checks);
    emit(out, j);
  } else {
    out << "algebra: " << l.label << "\n";
    if (!c.tau.empty()) out << "tau: " << int_list_text(c.tau) << "\n";
    out << "checks (nilpotency cap " << rep.nilpotency_cap << "):\n";
    print_checks(out, rep.checks);
    if (!c.tau.empty() && ok && !rep.ok()) out << "CGL extension; not symmetric in this order\n";
    out << (ok ? "valid" : "invalid") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_primes(const JobConfig& c, const Loaded& l, std::ostream& out) {
  if (!l.cgl) throw ParseError("primes needs a quantum presentation; use the poisson command");
  const CGLPresentation p = maybe_reindex(c, *l.cgl);
  const PbwAlgebra alg(p);
  const PrimeSequence seq = compute_prime_sequence(alg, {c.degree_cap});
  const OmegaTable omega = OmegaTable::from_presentation(p);
  quasi_commutation_scalars(alg, seq, omega);
  const auto names = out_names(c, p.names);
  const ScalarStyle style = text_style(c);
  if (c.format == OutputFormat::kMachine) {
    Json j = header("primes", l);
    if (!c.tau.empty()) j["tau"] = c.tau;
    j["N"] = seq.n;
    j["rank"] = seq.rank;
    j["eta"] = seq.eta;
    j["pred"] = link_array(seq.pred, seq.n, true);
    j["succ"] = link_array(seq.succ, seq.n, false);
    j["ebar"] = matrix_json(seq.ebar);
    Json cs = Json::array();
    for (int k = 0; k < seq.n; ++k) {
      if (seq.c[static_cast<std::size_t>(k)]) {
        cs.push_back({{"k", k + 1}, {"poly", render_ncpoly(*seq.c[static_cast<std::size_t>(k)], names, style)}});
      }
    }
    j["c"] = cs;
    Json ys = Json::array();
    for (const auto& y : seq.y) ys.push_back(render_ncpoly(y, names, style));
    j["y"] = ys;
    j["omega"] = matrix_json(omega.vexp);
    emit(out, j);
    return 0;
  }
  out << "algebra: " << l.label << " (N = " << seq.n << ")\n";
  if (!c.tau.empty()) out << "tau: " << int_list_text(c.tau) << "\n";
  for (int k = 0; k < seq.n; ++k) {
    out << "y_" << k + 1 << " = " << render_ncpoly(seq.y[static_cast<std::size_t>(k)], names, style) << "\n";
  }
  for (int k = 0; k < seq.n; ++k) {
    if (seq.c[static_cast<std::size_t>(k)]) {
      out << "c_" << k + 1 << " = "
          << render_ncpoly(*seq.c[static_cast<std::size_t>(k)], names, style) << "\n";
    }
  }
  out << "eta = " << int_list_text(seq.eta) << "\n";
  out << "p = " << link_text(seq.pred, true) << "\n";
  out << "s = " << link_text(seq.succ, false) << "\n";
  out << "rank = " << seq.rank << "\n";
  return 0;
}

std::string power_text(int vexp) {
  return LaurentScalar(QPower{vexp}).to_string(ScalarStyle::kQIfEven);
}

Json seed_json(const QuantumSeed& s, bool with_vars) {
  Json j;
  j["ex"] = one_based(s.ex);
  std::vector<int> frozen;
  for (int k = 0; k < s.n; ++k) {
    if (s.frozen[static_cast<std::size_t>(k)]) frozen.push_back(k);
  }
  j["frozen"] = one_based(frozen);
  j["dstar"] = s.dstar;
  j["lambda"] = matrix_json(s.lambda);
  j["B"] = matrix_json(s.b);
  if (with_vars) {
    Json v = Json::array();
    for (const auto& x : s.vars) v.push_back(render_torus(x));
    j["vars"] = v;
  }
  return j;
}

int cmd_seed(const JobConfig& c, const Loaded& l, std::ostream& out) {
  if (!l.cgl) throw ParseError("seed needs a quantum presentation; use the poisson command");
  const CGLPresentation p = maybe_reindex(c, *l.cgl);
  const PbwAlgebra alg(p);
  const SeedPipeline sp = compute_seed_pipeline(alg, {c.degree_cap});
  const QuantumSeed& s = sp.seed;
  const auto names = out_names(c, p.names);
  const ScalarStyle style = text_style(c);
  if (c.format == OutputFormat::kMachine) {
    Json j = header("seed", l);
    if (!c.tau.empty()) j["tau"] = c.tau;
    j["N"] = s.n;
    j["lambda_star_vexp"] = sp.conditions.lambda_star_vexp;
    Json d = Json::object();
    for (const auto& [e, v] : sp.conditions.d) d[std::to_string(e)] = v;
    j["d"] = d;
    j["conditions"] = checks_json(sp.conditions.checks);
    Json seedj = seed_json(s, false);
    Json vars = Json::array();
    for (const auto& y : sp.seq.y) vars.push_back(render_ncpoly(y, names, style));
    seedj["vars"] = vars;
    j["seed"] = seedj;
    emit(out, j);
    return 0;
  }
  out << "algebra: " << l.label << " (N = " << s.n << ")\n";
  out << "conditions:\n";
  print_checks(out, sp.conditions.checks);
  std::vector<std::string> ls;
  for (int x : sp.conditions.lambda_star_vexp) ls.push_back(power_text(x));
  out << "lambda* = [" << join(ls) << "]\n";
  std::vector<std::string> ds;
  for (const auto& [e, v] : sp.conditions.d) ds.push_back("d_" + std::to_string(e) + " = " + std::to_string(v));
  out << join(ds) << "\n";
  out << "ex = " << index_set(s.ex) << "\n";
  std::vector<int> frozen;
  for (int k = 0; k < s.n; ++k) {
    if (s.frozen[static_cast<std::size_t>(k)]) frozen.push_back(k);
  }
  out << "frozen = " << index_set(frozen) << "\n";
  out << "Lambda (v-exponents of Omega(ebar_k, ebar_l)):\n";
  print_matrix(out, s.lambda, range_labels("k=", s.n), range_labels("l=", s.n));
  out << "B (rows k, columns l in ex):\n";
  print_matrix(out, s.b, range_labels("k=", s.n), labels("l=", s.ex));
  out << "cluster variables M(e_k) = y_k:\n";
  for (int k = 0; k < s.n; ++k) {
    out << "  " << k + 1 << (s.frozen[static_cast<std::size_t>(k)] ? " (frozen) " : " ") << "y_"
        << k + 1 << " = " << render_ncpoly(sp.seq.y[static_cast<std::size_t>(k)], names, style) << "\n";
  }
  return 0;
}

int cmd_mutate(const JobConfig& c, const Loaded& l, std::ostream& out) {
  if (!l.cgl) throw ParseError("mutate needs a quantum presentation");
  const CGLPresentation p = maybe_reindex(c, *l.cgl);
  const PbwAlgebra alg(p);
  const SeedPipeline sp = compute_seed_pipeline(alg, {c.degree_cap});
  const TorusEmbedding emb(alg, sp.seq, sp.seed);
  const auto names = out_names(c, p.names);
  const ScalarStyle style = text_style(c);
  QuantumSeed s = sp.seed;
  Json trace = Json::array();
  std::ostringstream text;
  bool all_in_r = true;
  for (int k1 : c.sequence) {
    s = mutate(s, k1 - 1);
    const TorusElement& var = s.vars[static_cast<std::size_t>(k1 - 1)];
    const auto pre = emb.membership(var);
    all_in_r = all_in_r && pre.has_value();
    const std::string shown = pre ? render_ncpoly(*pre, names, style) : render_torus(var, style);
    trace.push_back({{"k", k1}, {"in_R", pre.has_value()}, {"variable", shown}});
    text << "mu_" << k1 << ": new X_" << k1 << (pre ? " = " : " (torus only) = ") << shown << "\n";
  }
  const std::string witness = compatibility_witness(s);
  if (c.format == OutputFormat::kMachine) {
    Json j = header("mutate", l);
    j["sequence"] = c.sequence;
    j["trace"] = trace;
    j["compatible"] = witness.empty();
    j["seed"] = seed_json(s, true);
    emit(out, j);
  } else {
    out << "algebra: " << l.label << "\n" << text.str();
    out << "B after mutation:\n";
    print_matrix(out, s.b, range_labels("k=", s.n), labels("l=", s.ex));
    out << "compatibility: " << (witness.empty() ? "holds" : "FAILS (" + witness + ")") << "\n";
  }
  return witness.empty() && (all_in_r || !c.check_membership) ? 0 : 1;
}

int cmd_explore(const JobConfig& c, const Loaded& l, std::ostream& out) {
  if (!l.cgl) throw ParseError("explore needs a quantum presentation");
  const CGLPresentation p = maybe_reindex(c, *l.cgl);
  const PbwAlgebra alg(p);
  const SeedPipeline sp = compute_seed_pipeline(alg, {c.degree_cap});
  ExploreOptions opts;
  opts.depth = c.depth;
  opts.check_membership = c.check_membership;
  opts.xi_report = c.xi_report;
  const ExploreReport rep = explore_exchange_graph(sp.seed, opts, &alg, &sp.seq);
  const auto names = out_names(c, p.names);
  const ScalarStyle style = text_style(c);
  const bool ok = rep.compatibility_failures.empty() && rep.all_members();
  if (c.format == OutputFormat::kMachine) {
    Json j = header("explore", l);
    j["depth"] = c.depth;
    Json seeds = Json::array();
    for (const auto& es : rep.seeds) {
      Json sj = seed_json(es.seed, true);
      sj["path"] = one_based(es.path);
      seeds.push_back(sj);
    }
    j["seed_count"] = rep.seeds.size();
    j["seeds"] = seeds;
    Json mem = Json::array();
    for (const auto& m : rep.membership) {
      mem.push_back({{"path", one_based(m.path)},
                     {"k", m.index + 1},
                     {"in_R", m.in_r},
                     {"preimage", m.preimage ? render_ncpoly(*m.preimage, names, style) : ""}});
    }
    if (c.check_membership) j["membership"] = mem;
    if (c.xi_report) {
      Json xi = Json::array();
      for (const auto& x : rep.xi) {
        xi.push_back({{"tau", one_based(x.tau)}, {"reached", x.reached}, {"path", one_based(x.path)}});
      }
      j["xi"] = xi;
    }
    j["compatibility_failures"] = rep.compatibility_failures;
    emit(out, j);
    return ok ? 0 : 1;
  }
  out << "algebra: " << l.label << "\n";
  out << "depth " << c.depth << ": " << rep.seeds.size() << " distinct seeds\n";
  for (const auto& es : rep.seeds) {
    std::vector<std::string> path;
    for (int k : es.path) path.push_back(std::to_string(k + 1));
    out << "  path (" << join(path) << ")\n";
  }
  if (c.check_membership) {
    out << "cluster variables:\n";
    for (const auto& m : rep.membership) {
      std::vector<std::string> path;
      for (int k : m.path) path.push_back(std::to_string(k + 1));
      out << "  path (" << join(path) << ") X_" << m.index + 1 << ": "
          << (m.in_r ? "in R, " + render_ncpoly(*m.preimage, names, style) : "NOT in R") << "\n";
    }
  }
  if (c.xi_report) {
    std::size_t reached = 0;
    for (const auto& x : rep.xi) reached += x.reached ? 1 : 0;
    out << "Xi seeds reached: " << reached << " of " << rep.xi.size() << "\n";
    for (const auto& x : rep.xi) {
      std::vector<std::string> t;
      for (int v : x.tau) t.push_back(std::to_string(v + 1));
      out << "  tau (" << join(t) << "): " << (x.reached ? "reached" : "not reached") << "\n";
    }
  }
  for (const auto& f : rep.compatibility_failures) out << "compatibility failure: " << f << "\n";
  return ok ? 0 : 1;
}

std::string word_text(const std::vector<int>& w) {
  std::vector<std::string> s;
  for (int x : w) s.push_back(std::to_string(x));
  return "(" + join(s, ",") + ")";
}

int cmd_catalog(const JobConfig& c, std::ostream& out) {
  std::string kind = c.catalog_kind;
  std::string type = c.cartan_type;
  std::vector<int> word = c.word, w = c.word_w, v = c.word_v;
  int rows = c.rows, cols = c.cols;
  if (!c.preset.empty()) {
    const auto parts = split(c.preset, ':');
    kind = parts[0];
    if (kind == "schubert" && parts.size() == 3) {
      type = parts[1];
      word = parse_int_list(parts[2]);
    } else if (kind == "bz" && parts.size() == 4) {
      type = parts[1];
      w = parse_int_list(parts[2]);
      v = parse_int_list(parts[3]);
    } else if ((kind == "qmatrix" || kind == "poisson-qmatrix") && parts.size() == 2) {
      std::tie(rows, cols) = parse_shape(parts[1]);
    } else {
      throw ParseError("bad catalog preset '" + c.preset + "'");
    }
  }
  if (kind == "qmatrix" || kind == "poisson-qmatrix") {
    if (rows < 1 || cols < 1) throw ParseError("catalog qmatrix needs --rows and --cols");
    out << (kind == "qmatrix" ? write_presentation(quantum_matrices(rows, cols))
                              : write_poisson_presentation(poisson_quantum_matrices(rows, cols)));
    return 0;
  }
  if (type.empty()) throw ParseError("catalog needs a Cartan type");
  const CartanData cd = CartanData::from_string(type);
  if (kind == "schubert") {
    const SchubertMatrix sm = schubert_exchange_matrix(cd, word);
    std::optional<bool> reduced;
    if (cd.type == 'A') reduced = is_reduced_type_a(cd, word);
    if (c.format == OutputFormat::kMachine) {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "catalog";
      j["kind"] = "schubert";
      j["type"] = cd.name();
      j["word"] = word;
      if (reduced) j["reduced"] = *reduced;
      j["kminus"] = link_array(sm.data.kminus, static_cast<int>(word.size()), true);
      j["kplus"] = link_array(sm.data.kplus, static_cast<int>(word.size()), false);
      j["ex"] = one_based(sm.data.ex);
      j["B"] = matrix_json(sm.b);
      emit(out, j);
      return 0;
    }
    out << "type " << cd.name() << ", word " << word_text(word) << "\n";
    if (reduced) {
      out << "reduced: " << (*reduced ? "yes" : "NO") << "\n";
    } else {
      out << "reduced: not checked (type " << cd.type << ")\n";
    }
    out << "ex_w = " << index_set(sm.data.ex) << "\n";
    out << "B (rows k, columns l in ex_w):\n";
    print_matrix(out, sm.b, range_labels("k=", static_cast<int>(word.size())), labels("l=", sm.data.ex));
    return 0;
  }
  if (kind == "bz") {
    const BZMatrix bz = bz_exchange_matrix(cd, w, v);
    const int total = bz.data.r + bz.data.m + bz.data.n;
    if (c.format == OutputFormat::kMachine) {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "catalog";
      j["kind"] = "bz";
      j["type"] = cd.name();
      j["word_w"] = w;
      j["word_v"] = v;
      j["eta"] = bz.data.eta;
      j["eps"] = bz.data.eps;
      j["pred"] = link_array(bz.data.pred, total, true);
      j["succ"] = link_array(bz.data.succ, total, false);
      j["ex"] = one_based(bz.data.ex);
      j["B"] = matrix_json(bz.b);
      emit(out, j);
      return 0;
    }
    out << "type " << cd.name() << ", w = " << word_text(w) << ", v = " << word_text(v) << "\n";
    out << "eta = " << int_list_text(bz.data.eta) << "\n";
    out << "eps = " << int_list_text(bz.data.eps) << "\n";
    out << "ex_wv = " << index_set(bz.data.ex) << "\n";
    out << "B (rows k, columns l in ex_wv):\n";
    print_matrix(out, bz.b, range_labels("k=", total), labels("l=", bz.data.ex));
    return 0;
  }
  throw ParseError("unknown catalog kind '" + kind + "' (schubert, bz, qmatrix, poisson-qmatrix)");
}

std::string rational_text(const Rational& r) { return to_string(r); }

int cmd_poisson(const JobConfig& c, const Loaded& l, std::ostream& out) {
  if (!l.poisson) throw ParseError("poisson needs a Poisson presentation (flavor \"poisson\")");
  const PoissonBracket br(*l.poisson);
  const ValidationReport rep = validate_poisson(br, {c.nilpotency_cap});
  if (!rep.ok()) {
    if (c.format == OutputFormat::kMachine) {
      Json j = header("poisson", l);
      j["checks"] = checks_json(rep.checks);
      emit(out, j);
    } else {
      out << "algebra: " << l.label << "\n";
      print_checks(out, rep.checks);
    }
    return 1;
  }
  const PoissonPrimeSequence seq = poisson_prime_sequence(br, c.degree_cap);
  const ClassicalSeed cs = classical_seed_and_gsv_check(br, seq);
  const auto names = out_names(c, l.poisson->names);
  if (c.format == OutputFormat::kMachine) {
    Json j = header("poisson", l);
    j["checks"] = checks_json(rep.checks);
    j["eta"] = seq.eta;
    j["pred"] = link_array(seq.pred, seq.n, true);
    j["succ"] = link_array(seq.succ, seq.n, false);
    Json ys = Json::array();
    for (const auto& y : seq.y) ys.push_back(render_cpoly(y, names));
    j["y"] = ys;
    Json om = Json::array();
    for (const auto& row : cs.omega) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(rational_text(x));
      om.push_back(r);
    }
    j["omega"] = om;
    j["seed_checks"] = checks_json(cs.checks);
    j["ex"] = one_based(cs.ex);
    j["B"] = matrix_json(cs.b);
    emit(out, j);
    return cs.ok() ? 0 : 1;
  }
  out << "algebra: " << l.label << " (N = " << seq.n << ")\n";
  out << "checks:\n";
  print_checks(out, rep.checks);
  for (int k = 0; k < seq.n; ++k) {
    out << "y_" << k + 1 << " = " << render_cpoly(seq.y[static_cast<std::size_t>(k)], names) << "\n";
  }
  out << "eta = " << int_list_text(seq.eta) << "\n";
  out << "p = " << link_text(seq.pred, true) << "\n";
  out << "s = " << link_text(seq.succ, false) << "\n";
  out << "classical seed checks:\n";
  print_checks(out, cs.checks);
  out << "ex = " << index_set(cs.ex) << "\n";
  if (!cs.b.empty() || cs.ex.empty()) {
    out << "B (rows k, columns l in ex):\n";
    print_matrix(out, cs.b, range_labels("k=", seq.n), labels("l=", cs.ex));
  }
  return cs.ok() ? 0 : 1;
}

}  // namespace

int run(const JobConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.degree_cap < 1 || c.nilpotency_cap < 1) throw ParseError("caps must be positive");
    if (c.depth < 0) throw ParseError("depth must be nonnegative");
    if (c.command == "catalog") return cmd_catalog(c, out);
    const Loaded l = load_algebra(c);
    if (c.command == "validate") return cmd_validate(c, l, out);
    if (c.command == "primes") return cmd_primes(c, l, out);
    if (c.command == "seed") return cmd_seed(c, l, out);
    if (c.command == "mutate") return cmd_mutate(c, l, out);
    if (c.command == "explore") return cmd_explore(c, l, out);
    if (c.command == "poisson") return cmd_poisson(c, l, out);
    throw ParseError("unknown command '" + c.command + "'");
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum nilpotent algebras: prime elements, quantum seeds and mutation"};
  app.require_subcommand(1);
  JobConfig c;
  std::string format = "text";
  std::string tau, sequence, word, ww, wv;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", c.preset, "qmatrix:MxN, poisson-qmatrix:MxN, schubert:T:w, bz:T:w:v");
    sub->add_option("--input", c.input, "presentation file (JSON, schema qnca/1)");
    sub->add_option("input_file", c.input, "presentation file")->check(CLI::ExistingFile);
    sub->add_option("--degree-cap", c.degree_cap, "degree bound for the prime-element search")
        ->capture_default_str();
    sub->add_option("--nilp-cap", c.nilpotency_cap, "iteration cap for local nilpotency")
        ->capture_default_str();
    sub->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    sub->add_option("--tau", tau, "reindex by tau in Xi_N, e.g. 2,3,1");
  };
  auto* validate = app.add_subcommand("validate", "check the CGL (or Poisson) conditions");
  common(validate);
  auto* primes = app.add_subcommand("primes", "sequence of homogeneous prime elements");
  common(primes);
  auto* seed = app.add_subcommand("seed", "initial quantum seed");
  common(seed);
  auto* mut = app.add_subcommand("mutate", "mutate the initial seed along a sequence");
  common(mut);
  mut->add_option("--sequence", sequence, "mutation directions, e.g. 1,2,1")->required();
  mut->add_flag("--check-membership", c.check_membership, "fail unless every new variable is in R");
  auto* explore = app.add_subcommand("explore", "breadth-first mutation exploration");
  common(explore);
  explore->add_option("--depth", c.depth, "mutation depth")->capture_default_str();
  explore->add_flag("--check-membership", c.check_membership, "test each cluster variable for membership in R");
  explore->add_flag("--xi-report", c.xi_report, "report which seeds of the Xi_N presentations are reached");
  auto* catalog = app.add_subcommand("catalog", "built-in presentations and exchange matrices");
  catalog->add_option("--preset", c.preset, "schubert:T:w, bz:T:w:v, qmatrix:MxN");
  catalog->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  catalog->add_option("kind", c.catalog_kind, "schubert, bz, qmatrix or poisson-qmatrix");
  catalog->add_option("--type", c.cartan_type, "Cartan type, e.g. A2");
  catalog->add_option("--word", word, "reduced word, e.g. 1,2,1");
  catalog->add_option("--w", ww, "reduced word for w");
  catalog->add_option("--v", wv, "reduced word for v");
  catalog->add_option("--rows", c.rows, "rows m of R_q[M_mxn]");
  catalog->add_option("--cols", c.cols, "columns n of R_q[M_mxn]");
  auto* poisson = app.add_subcommand("poisson", "Poisson primes, classical seed and GSV check");
  common(poisson);

  try {
    app.parse(argc, argv);
    c.command = app.get_subcommands().front()->get_name();
    c.format = format == "machine" ? OutputFormat::kMachine : OutputFormat::kText;
    c.tau = parse_int_list(tau);
    c.sequence = parse_int_list(sequence);
    c.word = parse_int_list(word);
    c.word_w = parse_int_list(ww);
    c.word_v = parse_int_list(wv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return run(c, out, err);
}

}  // namespace qnca
