// Copyright 2026 The weur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text helpers shared by the subcommands: locale-independent number output,
// real-number and grid parsing.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weur/entropy.hpp"

namespace weur::cli {

/// 17-significant-digit rendering that round-trips every
/// double. Non-finite values print as "inf", "-inf" and "nan".
std::string format_real(double x);

/// A real number, optionally written as a multiple of pi: "0.25", "pi",
/// "-pi/2", "3pi/8", "3*pi/8", "0.5*pi".
double parse_real(std::string_view text);

/// "start:stop:count" (count >= 1 points, endpoints included), a comma
/// separated list, or the empty string for an empty grid.
std::vector<double> parse_grid(std::string_view text);

/// Comma separated Renyi orders such as "1,2,inf".
std::vector<RenyiOrder> parse_alphas(std::string_view text);

/// Replaces CSV-hostile characters (comma, newline, quote) in free text.
std::string csv_safe(std::string text);

}  // namespace weur::cli
