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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnca {

enum class OutputFormat { kText, kMachine };

struct JobConfig {
  std::string command;  // validate, primes, seed, mutate, explore, catalog, poisson
  std::string preset;   // qmatrix:MxN, poisson-qmatrix:MxN, schubert:T:w, bz:T:w:v
  std::string input;    // presentation file
  int degree_cap = 12;
  int nilpotency_cap = 64;
  int depth = 3;
  bool check_membership = false;
  bool xi_report = false;
  OutputFormat format = OutputFormat::kText;
  std::vector<int> tau;       // 1-based values
  std::vector<int> sequence;  // mutation directions, 1-based
  // catalog subcommand form
  std::string catalog_kind;  // schubert, bz, qmatrix
  std::string cartan_type;
  std::vector<int> word;
  std::vector<int> word_w;
  std::vector<int> word_v;
  int rows = 0;
  int cols = 0;
};

/// Exit status: 0 success, 1 mathematical check failure, 2 I/O or parse
/// error. Reports go to `out`, diagnostics to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a JobConfig and runs it.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Comma-separated integers, e.g. "1,2,1". Empty text gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace qnca
