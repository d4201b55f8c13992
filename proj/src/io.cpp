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

#include "qnca/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qnca/error.hpp"
#include "qnca/polytext.hpp"

namespace qnca {

using Json = nlohmann::ordered_json;

namespace {

std::string generator_name(const std::vector<std::string>& names, std::size_t i) {
  if (i < names.size() && !names[i].empty()) return names[i];
  return "x" + std::to_string(i + 1);
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generator_name(names, i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Appends one signed term; `mag` is the unsigned coefficient text or empty
// for a unit coefficient.
void append_term(std::string& out, bool negative, const std::string& mag, const std::string& mono) {
  std::string body;
  if (mono.empty()) {
    body = mag.empty() ? "1" : mag;
  } else {
    body = mag.empty() ? mono : mag + "*" + mono;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

template <class Poly, class Fn>
std::string render_sum(const Poly& p, Fn&& term) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) term(out, it->first, it->second);
  return out;
}

void laurent_term(std::string& out, const LaurentScalar& c, const std::string& mono,
                  ScalarStyle style) {
  if (auto m = c.as_monomial()) {
    const bool neg = sgn(m->first) < 0;
    const LaurentScalar mag = LaurentScalar::monomial(neg ? Rational(-m->first) : m->first, m->second);
    append_term(out, neg, mag.is_one() ? std::string() : mag.to_string(style), mono);
  } else {
    append_term(out, false, "(" + c.to_string(style) + ")", mono);
  }
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

Rational json_rational(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) fail(what + ": bad rational '" + j.get<std::string>() + "'");
    r.canonicalize();
    return r;
  }
  fail(what + ": expected an integer or a rational string");
}

Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

IntMatrix json_int_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(what + ": expected an array of rows");
    IntVec r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) fail(what + ": expected integers");
      r.push_back(x.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

RationalMatrix json_rational_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array of rows");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(what + ": expected an array of rows");
    RationalVec r;
    for (const auto& x : row) r.push_back(json_rational(x, what));
    m.push_back(std::move(r));
  }
  return m;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

struct CommonFields {
  int n = 0;
  int torus_rank = 0;
  IntMatrix weights;
  std::vector<std::string> names;
};

CommonFields read_common(const Json& j, const std::string& flavor) {
  if (!j.is_object()) fail("presentation must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema) fail("unsupported schema " + j["schema"].dump());
  const std::string fl = j.value("flavor", std::string("cgl"));
  if (fl != flavor) fail("expected flavor '" + flavor + "', found '" + fl + "'");
  for (const char* key : {"N", "torus_rank", "weights", "h"}) {
    if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  }
  if (!j["N"].is_number_integer() || !j["torus_rank"].is_number_integer()) {
    fail("N and torus_rank must be integers");
  }
  CommonFields c;
  c.n = j["N"].get<int>();
  c.torus_rank = j["torus_rank"].get<int>();
  if (c.n < 1) fail("N must be positive");
  c.weights = json_int_matrix(j["weights"], "weights");
  if (j.contains("names")) {
    if (!j["names"].is_array()) fail("names must be an array of strings");
    for (const auto& s : j["names"]) {
      if (!s.is_string()) fail("names must be an array of strings");
      c.names.push_back(s.get<std::string>());
    }
  }
  return c;
}

template <class Fn>
void read_delta(const Json& j, int n, Fn&& add) {
  if (!j.contains("delta")) return;
  if (!j["delta"].is_array()) fail("delta must be an array");
  for (const auto& d : j["delta"]) {
    if (!d.is_object() || !d.contains("k") || !d.contains("l") || !d.contains("poly") ||
        !d["k"].is_number_integer() || !d["l"].is_number_integer() || !d["poly"].is_string()) {
      fail("delta entries need integer k, l and a poly string");
    }
    const int k = d["k"].get<int>();
    const int l = d["l"].get<int>();
    if (l < 1 || k <= l || k > n) {
      fail("delta entry (" + std::to_string(k) + ", " + std::to_string(l) + ") needs 1 <= l < k <= N");
    }
    add(k - 1, l - 1, d["poly"].get<std::string>());
  }
}

}  // namespace

std::string render_ncpoly(const NCPoly& p, const std::vector<std::string>& names, ScalarStyle style) {
  return render_sum(p, [&](std::string& out, const Exponent& e, const LaurentScalar& c) {
    laurent_term(out, c, monomial_text(e, names), style);
  });
}

std::string render_cpoly(const CPoly& p, const std::vector<std::string>& names) {
  return render_sum(p, [&](std::string& out, const Exponent& e, const Rational& c) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    append_term(out, neg, mag == 1 ? std::string() : to_string(mag), monomial_text(e, names));
  });
}

std::string render_torus(const TorusElement& x, ScalarStyle style) {
  return render_sum(x, [&](std::string& out, const Exponent& f, const LaurentScalar& c) {
    std::string m = "M[";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) m += ',';
      m += std::to_string(f[i]);
    }
    m += "]";
    laurent_term(out, c, m, style);
  });
}

NCPoly parse_ncpoly(const std::string& text, int n, const std::vector<std::string>& names) {
  const ParsedSum sum = parse_expression(text, default_resolver(n, names));
  NCPoly out(n);
  for (const auto& t : sum) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < t.word.size(); ++i) {
      if (i > 0 && t.word[i] < t.word[i - 1]) {
        fail("term in '" + text + "' is not in PBW order x1..xN");
      }
      ++e[static_cast<std::size_t>(t.word[i])];
    }
    out.add_term(e, t.coeff);
  }
  return out;
}

NCPoly parse_element(const PbwAlgebra& alg, const std::string& text) {
  const CGLPresentation& p = alg.presentation();
  const ParsedSum sum = parse_expression(text, default_resolver(p.n, p.names));
  NCPoly out(p.n);
  for (const auto& t : sum) out += alg.word_product(t.word).scaled(t.coeff);
  return out;
}

CPoly parse_cpoly(const std::string& text, int n, const std::vector<std::string>& names) {
  const ParsedSum sum = parse_expression(text, default_resolver(n, names));
  CPoly out(n);
  for (const auto& t : sum) {
    const auto r = t.coeff.as_rational();
    if (!r && !t.coeff.is_zero()) fail("Poisson polynomial '" + text + "' has a non-rational coefficient");
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int g : t.word) ++e[static_cast<std::size_t>(g)];
    if (r) out.add_term(e, *r);
  }
  return out;
}

std::string write_presentation(const CGLPresentation& p) {
  Json j;
  j["schema"] = kSchema;
  j["flavor"] = "cgl";
  j["N"] = p.n;
  j["torus_rank"] = p.torus_rank;
  if (!p.names.empty()) j["names"] = p.names;
  j["weights"] = p.weights;
  j["h"] = p.h;
  if (p.hstar) j["hstar"] = *p.hstar;
  Json d = Json::array();
  for (const auto& [kl, poly] : p.delta) {
    if (poly.is_zero()) continue;
    d.push_back({{"k", kl.first + 1}, {"l", kl.second + 1}, {"poly", render_ncpoly(poly)}});
  }
  j["delta"] = d;
  return j.dump(2) + "\n";
}

CGLPresentation read_presentation(const std::string& json_text) {
  const Json j = parse_json(json_text);
  const CommonFields c = read_common(j, "cgl");
  CGLPresentation p;
  p.n = c.n;
  p.torus_rank = c.torus_rank;
  p.weights = c.weights;
  p.names = c.names;
  p.h = json_int_matrix(j["h"], "h");
  if (j.contains("hstar")) p.hstar = json_int_matrix(j["hstar"], "hstar");
  read_delta(j, p.n, [&](int k, int l, const std::string& text) {
    NCPoly poly = parse_ncpoly(text, p.n, p.names);
    if (!poly.is_zero()) p.delta[{k, l}] = std::move(poly);
  });
  try {
    p.check_shape();
  } catch (const InvalidPresentation& e) {
    fail(e.what());
  }
  return p;
}

std::string write_poisson_presentation(const PoissonPresentation& p) {
  Json j;
  j["schema"] = kSchema;
  j["flavor"] = "poisson";
  j["N"] = p.n;
  j["torus_rank"] = p.torus_rank;
  if (!p.names.empty()) j["names"] = p.names;
  j["weights"] = p.weights;
  auto rmat = [](const RationalMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(rational_json(x));
      out.push_back(r);
    }
    return out;
  };
  j["h"] = rmat(p.h);
  if (p.hstar) j["hstar"] = rmat(*p.hstar);
  Json d = Json::array();
  for (const auto& [kl, poly] : p.delta) {
    if (poly.is_zero()) continue;
    d.push_back({{"k", kl.first + 1}, {"l", kl.second + 1}, {"poly", render_cpoly(poly)}});
  }
  j["delta"] = d;
  return j.dump(2) + "\n";
}

PoissonPresentation read_poisson_presentation(const std::string& json_text) {
  const Json j = parse_json(json_text);
  const CommonFields c = read_common(j, "poisson");
  PoissonPresentation p;
  p.n = c.n;
  p.torus_rank = c.torus_rank;
  p.weights = c.weights;
  p.names = c.names;
  p.h = json_rational_matrix(j["h"], "h");
  if (j.contains("hstar")) p.hstar = json_rational_matrix(j["hstar"], "hstar");
  read_delta(j, p.n, [&](int k, int l, const std::string& text) {
    CPoly poly = parse_cpoly(text, p.n, p.names);
    if (!poly.is_zero()) p.delta[{k, l}] = std::move(poly);
  });
  try {
    p.check_shape();
  } catch (const InvalidPresentation& e) {
    fail(e.what());
  }
  return p;
}

std::string presentation_flavor(const std::string& json_text) {
  const Json j = parse_json(json_text);
  if (!j.is_object()) fail("presentation must be a JSON object");
  return j.value("flavor", std::string("cgl"));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qnca
