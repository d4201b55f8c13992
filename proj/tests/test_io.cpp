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

#include <catch2/catch_amalgamated.hpp>

#include "qnca/catalog.hpp"
#include "qnca/error.hpp"
#include "qnca/io.hpp"
#include "qnca/primes.hpp"

using namespace qnca;

TEST_CASE("polynomial rendering") {
  const PbwAlgebra alg(quantum_matrices(2, 2));
  const NCPoly det = quantum_minor(alg, 2, 2, {1, 2}, {1, 2});
  CHECK(render_ncpoly(det, alg.presentation().names, ScalarStyle::kQIfEven) == "t11*t22 - q*t12*t21");
  CHECK(render_ncpoly(det) == "x1*x4 - v^2*x2*x3");
  const NCPoly d = alg.skew_derivation(3, alg.generator(0));
  CHECK(render_ncpoly(d, alg.presentation().names, ScalarStyle::kQIfEven) == "(-q + q^-1)*t12*t21");
  CHECK(render_ncpoly(NCPoly(4)) == "0");
  CHECK(render_ncpoly(alg.one()) == "1");
  CHECK(render_torus(TorusElement::monomial({-1, 0, 0, 1}, LaurentScalar(QPower{2}))) == "v^2*M[-1,0,0,1]");
}

TEST_CASE("rendered polynomials parse back exactly") {
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
    const PbwAlgebra alg(quantum_matrices(m, n));
    const PrimeSequence seq = compute_prime_sequence(alg);
    for (const auto& y : seq.y) {
      CHECK(parse_ncpoly(render_ncpoly(y), m * n) == y);
      CHECK(parse_ncpoly(render_ncpoly(y, alg.presentation().names, ScalarStyle::kQIfEven), m * n,
                         alg.presentation().names) == y);
    }
  }
  CHECK_THROWS_AS(parse_ncpoly("x2*x1", 2), ParseError);
  CHECK_THROWS_AS(parse_ncpoly("x3", 2), ParseError);
  CHECK(parse_cpoly("2*x1*x2 - 1/2*x2^2", 2) ==
        CPoly::monomial({1, 1}, Rational(2)) - CPoly::monomial({0, 2}, Rational(1) / 2));
  CHECK_THROWS_AS(parse_cpoly("q*x1", 2), ParseError);
}

TEST_CASE("presentation files round trip bit-exactly") {
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
    const CGLPresentation p = quantum_matrices(m, n);
    const std::string text = write_presentation(p);
    const CGLPresentation back = read_presentation(text);
    CHECK(back.weights == p.weights);
    CHECK(back.h == p.h);
    CHECK(back.hstar == p.hstar);
    CHECK(back.delta == p.delta);
    CHECK(back.names == p.names);
    CHECK(write_presentation(back) == text);
    CHECK(presentation_flavor(text) == "cgl");

    const PoissonPresentation pp = poisson_quantum_matrices(m, n);
    const std::string ptext = write_poisson_presentation(pp);
    const PoissonPresentation pback = read_poisson_presentation(ptext);
    CHECK(pback.h == pp.h);
    CHECK(pback.delta == pp.delta);
    CHECK(write_poisson_presentation(pback) == ptext);
    CHECK(presentation_flavor(ptext) == "poisson");
  }
}

TEST_CASE("malformed presentation files") {
  CHECK_THROWS_AS(read_presentation("{"), ParseError);
  CHECK_THROWS_AS(read_presentation("[]"), ParseError);
  CHECK_THROWS_AS(read_presentation(R"({"schema":"qnca/9","N":1,"torus_rank":1,"weights":[[1]],"h":[[1]],"delta":[]})"),
                  ParseError);
  CHECK_THROWS_AS(read_presentation(R"({"N":1,"torus_rank":1,"weights":[[1]],"delta":[]})"), ParseError);
  CHECK_THROWS_AS(read_presentation(R"({"N":2,"torus_rank":1,"weights":[[1]],"h":[[1],[1]],"delta":[]})"),
                  ParseError);
  CHECK_THROWS_AS(read_presentation(
                      R"({"N":2,"torus_rank":1,"weights":[[1],[1]],"h":[[1],[1]],"delta":[{"k":1,"l":2,"poly":"x1"}]})"),
                  ParseError);
  CHECK_THROWS_AS(read_presentation(
                      R"({"N":2,"torus_rank":1,"weights":[[1],[1]],"h":[[1],[1]],"delta":[{"k":2,"l":1,"poly":"x2"}]})"),
                  ParseError);
  CHECK_THROWS_AS(read_poisson_presentation(R"({"flavor":"cgl","N":1,"torus_rank":1,"weights":[[1]],"h":[[1]],"delta":[]})"),
                  ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/qnca.json"), ParseError);
}

TEST_CASE("minimal presentation without optional fields") {
  const CGLPresentation p = read_presentation(
      R"({"N":2,"torus_rank":2,"weights":[[1,0],[0,1]],"h":[[1,0],[1,1]],"delta":[{"k":2,"l":1,"poly":"0"}]})");
  CHECK(p.n == 2);
  CHECK(p.delta.empty());
  CHECK_FALSE(p.hstar.has_value());
  CHECK(p.lambda_vexp(1, 0) == 2);
}
