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

#include <random>

#include "qnca/error.hpp"
#include "qnca/ratfunc.hpp"
#include "qnca/scalars.hpp"

using namespace qnca;

namespace {

LaurentScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-5, 5), len(0, 4);
  LaurentScalar::Terms t;
  const int terms = len(rng);
  for (int i = 0; i < terms; ++i) t[exp(rng)] += Rational(coef(rng)) / (1 + (i % 3));
  return LaurentScalar::from_terms(t);
}

}  // namespace

TEST_CASE("Laurent scalars form a commutative ring") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentScalar(1) == a);
  }
}

TEST_CASE("zero coefficients are never stored") {
  const auto x = LaurentScalar::from_terms({{1, Rational(2)}, {3, Rational(0)}});
  CHECK(x.size() == 1);
  CHECK((LaurentScalar::monomial(3, 2) - LaurentScalar::monomial(3, 2)).terms().empty());
}

TEST_CASE("q-powers and units") {
  const LaurentScalar q = QPower::q(1);
  CHECK(q.as_qpower() == 2);
  CHECK((q * LaurentScalar(QPower{-2})).is_one());
  const auto u = LaurentScalar::monomial(Rational(-3, 2), 5);
  const auto a = LaurentScalar::monomial(1, 1) + LaurentScalar::monomial(4, -2);
  CHECK(divide_by_unit(a * u, u) == a);
  CHECK_THROWS_AS(divide_by_unit(a, a + LaurentScalar(1)), MathError);
}

TEST_CASE("evaluation at v = 1 and derivative") {
  // q - q^-1 = v^2 - v^-2: value 0, derivative 4
  const LaurentScalar d = LaurentScalar(QPower::q(1)) - LaurentScalar(QPower::q(-1));
  CHECK(d.eval_at_one() == 0);
  CHECK(d.derivative_at_one() == 4);
  CHECK(LaurentScalar::monomial(Rational(1, 3), -3).derivative_at_one() == -1);
}

TEST_CASE("rendering in v and q") {
  const LaurentScalar d = LaurentScalar(QPower::q(1)) - LaurentScalar(QPower::q(-1));
  CHECK(d.to_string(ScalarStyle::kQIfEven) == "q - q^-1");
  CHECK(d.to_string(ScalarStyle::kV) == "v^2 - v^-2");
  CHECK(LaurentScalar(QPower{3}).to_string(ScalarStyle::kQIfEven) == "v^3");
  CHECK(LaurentScalar(0).to_string() == "0");
  CHECK(LaurentScalar::monomial(Rational(-3, 2), 0).to_string() == "-3/2");
}

TEST_CASE("parse and render round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_scalar(rng);
    CHECK(parse_scalar(a.to_string(ScalarStyle::kV)) == a);
    CHECK(parse_scalar(a.to_string(ScalarStyle::kQIfEven)) == a);
  }
  CHECK(parse_scalar("(1 + q)*(v^3)") == LaurentScalar::monomial(1, 3) + LaurentScalar::monomial(1, 5));
  CHECK_THROWS_AS(parse_scalar("1 + "), ParseError);
  CHECK_THROWS_AS(parse_scalar("x1"), ParseError);
}

TEST_CASE("rational functions reduce to Laurent form when possible") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_scalar(rng);
    auto b = random_scalar(rng);
    if (b.is_zero()) b = LaurentScalar(1);
    const RatFunc f = RatFunc::from_laurent(a * b) / RatFunc::from_laurent(b);
    LaurentScalar back;
    REQUIRE(f.to_laurent(back));
    CHECK(back == a);
  }
  const RatFunc g = RatFunc::from_laurent(LaurentScalar(1)) /
                    RatFunc::from_laurent(LaurentScalar(1) + LaurentScalar(QPower{1}));
  LaurentScalar out;
  CHECK_FALSE(g.to_laurent(out));
}
