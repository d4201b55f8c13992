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

#include <string>
#include <vector>

#include "qnca/cgl.hpp"
#include "qnca/ore.hpp"
#include "qnca/poisson.hpp"

namespace qnca {

/// Version tag of the file and machine-output schema.
inline constexpr const char* kSchema = "qnca/1";

/// Sum of terms in descending PBW (RevLex) order, e.g.
/// "t11*t22 - q*t12*t21" or "-(v^2 - v^-2)*x2*x3". Empty names give x1..xN.
std::string render_ncpoly(const NCPoly& p, const std::vector<std::string>& names = {},
                          ScalarStyle style = ScalarStyle::kV);
std::string render_cpoly(const CPoly& p, const std::vector<std::string>& names = {});
/// Torus elements as sums of c*M[f1,...,fN].
std::string render_torus(const TorusElement& x, ScalarStyle style = ScalarStyle::kV);

/// Parses a polynomial whose words are already in PBW order (nondecreasing
/// generator indices). Throws ParseError otherwise.
NCPoly parse_ncpoly(const std::string& text, int n, const std::vector<std::string>& names = {});
/// Parses arbitrary words and normal-forms them in the algebra.
NCPoly parse_element(const PbwAlgebra& alg, const std::string& text);
CPoly parse_cpoly(const std::string& text, int n, const std::vector<std::string>& names = {});

/// JSON presentation files. Shape errors surface as ParseError.
std::string write_presentation(const CGLPresentation& p);
CGLPresentation read_presentation(const std::string& json_text);
std::string write_poisson_presentation(const PoissonPresentation& p);
PoissonPresentation read_poisson_presentation(const std::string& json_text);
/// "cgl" or "poisson" from the flavor field (default "cgl").
std::string presentation_flavor(const std::string& json_text);

std::string read_file(const std::string& path);

}  // namespace qnca
