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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnca/scalars.hpp"

namespace qnca {

/// One summand of a parsed expression: a scalar times a word of generator
/// indices, kept in the order written.
struct ParsedTerm {
  LaurentScalar coeff;
  std::vector<int> word;
};

using ParsedSum = std::vector<ParsedTerm>;

/// Maps an identifier to a generator index; nullopt when unknown.
using GeneratorResolver = std::function<std::optional<int>(std::string_view)>;

/// Parses sums of products built from rationals, `v`, `q` (= v^2), generator
/// names and parentheses, e.g. "-(q - q^-1)*x2*x3 + 3/2*v^-1*x1^2". Products
/// are expanded distributively; generator order within a word is preserved.
/// An empty resolver accepts only scalar atoms.
ParsedSum parse_expression(std::string_view text, const GeneratorResolver& resolve);

/// Resolver for the names x1..xN plus optional custom names.
GeneratorResolver default_resolver(int n, const std::vector<std::string>& names = {});

}  // namespace qnca
