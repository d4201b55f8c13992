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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qnca/cli.hpp"
#include "qnca/catalog.hpp"
#include "qnca/io.hpp"
#include "qnca/primes.hpp"

using namespace qnca;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "qnca");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("primes on the 2x2 preset") {
  const Result r = run_args({"primes", "--preset", "qmatrix:2x2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("y_4 = t11*t22 - q*t12*t21") != std::string::npos);
}

TEST_CASE("catalog schubert") {
  const Result r = run_args({"catalog", "schubert", "--type", "A2", "--word", "1,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ex_w = {3}") != std::string::npos);
  const Result m = run_args({"catalog", "--preset", "schubert:A2:1,2,1", "--format", "machine"});
  REQUIRE(m.code == 0);
  const auto j = nlohmann::json::parse(m.out);
  CHECK(j["ex"] == nlohmann::json::array({3}));
  CHECK(j["B"] == nlohmann::json::parse("[[1],[-1],[0]]"));
}

TEST_CASE("catalog bz machine output") {
  const Result r = run_args({"catalog", "--preset", "bz:A1:1:1", "--format", "machine"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "qnca/1");
  CHECK(j["B"] == nlohmann::json::parse("[[0,-1],[1,0],[0,-1]]"));
  CHECK(j["succ"] == nlohmann::json::parse("[2,3,4]"));
  CHECK(j["pred"] == nlohmann::json::parse("[0,1,2]"));
}

TEST_CASE("validate exit codes") {
  const std::string bad = temp_file("qnca_bad_lambda.json",
                                    R"({"N":2,"torus_rank":2,"weights":[[1,0],[0,1]],"h":[[1,0],[0,0]],"delta":[]})");
  const Result r = run_args({"validate", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("lambda_2 = 1") != std::string::npos);

  const std::string good = temp_file("qnca_q22.json", write_presentation(quantum_matrices(2, 2)));
  CHECK(run_args({"validate", "--input", good}).code == 0);

  const std::string junk = temp_file("qnca_junk.json", "{ not json");
  CHECK(run_args({"validate", junk}).code == 2);
  CHECK(run_args({"validate", "--input", "/nonexistent/x.json"}).code == 2);
  CHECK(run_args({"validate", "--preset", "qmatrix:0x2"}).code == 2);
  CHECK(run_args({"frobnicate"}).code == 2);
  CHECK(run_args({"primes", "--preset", "qmatrix:2x2", "--degree-cap", "0"}).code == 2);
  CHECK(run_args({"explore", "--preset", "qmatrix:2x2", "--depth", "-1"}).code == 2);
  CHECK(run_args({"mutate", "--preset", "qmatrix:2x2", "--sequence", "2"}).code == 1);
  CHECK(run_args({"primes", "--preset", "qmatrix:2x2", "--tau", "1,3,2,4"}).code == 1);
  CHECK(run_args({"primes", "--preset", "qmatrix:2x2", "--tau", "1,x"}).code == 2);
}

TEST_CASE("machine output parses back through the presentation parsers") {
  const Result r = run_args({"primes", "--preset", "qmatrix:3x3", "--format", "machine"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const PbwAlgebra alg(quantum_matrices(3, 3));
  const PrimeSequence seq = compute_prime_sequence(alg);
  REQUIRE(j["y"].size() == 9);
  for (std::size_t k = 0; k < 9; ++k) CHECK(parse_ncpoly(j["y"][k].get<std::string>(), 9) == seq.y[k]);
  const std::string cat = run_args({"catalog", "qmatrix", "--rows", "2", "--cols", "3"}).out;
  CHECK(write_presentation(read_presentation(cat)) == cat);
}

TEST_CASE("commands on presets") {
  CHECK(run_args({"seed", "--preset", "qmatrix:2x3"}).code == 0);
  const Result mu = run_args({"mutate", "--preset", "qmatrix:2x2", "--sequence", "1", "--check-membership"});
  CHECK(mu.code == 0);
  CHECK(mu.out.find("new X_1 = t22") != std::string::npos);
  const Result ex = run_args({"explore", "--preset", "qmatrix:2x2", "--depth", "2", "--check-membership"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("2 distinct seeds") != std::string::npos);
  const Result po = run_args({"poisson", "--preset", "poisson-qmatrix:2x2"});
  CHECK(po.code == 0);
  CHECK(po.out.find("y_4 = t11*t22 - t12*t21") != std::string::npos);
  CHECK(run_args({"primes", "--preset", "poisson-qmatrix:2x2"}).code == 2);
  CHECK(run_args({"validate", "--preset", "poisson-qmatrix:2x2"}).code == 0);
  CHECK(run_args({"validate", "--preset", "qmatrix:2x2", "--tau", "2,1,3,4"}).code == 0);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"primes", "--preset", "qmatrix:2x3", "--format", "machine"},
           {"seed", "--preset", "qmatrix:3x3", "--format", "machine"},
           {"explore", "--preset", "qmatrix:2x3", "--format", "machine", "--check-membership"},
           {"poisson", "--preset", "poisson-qmatrix:2x3", "--format", "machine"}}) {
    const Result a = run_args(args), b = run_args(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
