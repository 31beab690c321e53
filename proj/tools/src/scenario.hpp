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

// Scenario files: a JSON document describing a measurement ensemble and,
// optionally, a state.
//
//   {
//     "dimension": 2,
//     "povms": [ [effect, effect, ...], ... ],   // effect = rows of [re, im]
//     "weights": [0.5, 0.5],                     // optional, default equal
//     "state": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],   // optional matrix
//     "state_vector": [[1, 0], [0, 0]],                // or a pure state
//     "family": {"name": "mub", "d": 3, "count": 4},   // instead of "povms"
//     "noise": 0.9                                     // optional visibility
//   }
//
// Matrix entries may also be plain numbers (zero imaginary part). Angles in
// a family descriptor may be numbers or strings such as "pi/4".

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weur/ensembles.hpp"
#include "weur/qmat.hpp"

namespace weur::cli {

/// Parsed but unvalidated scenario contents.
struct RawScenario {
  std::optional<int> dimension;
  std::vector<std::vector<ComplexMatrix>> povms;
  std::optional<std::vector<double>> weights;
  std::optional<ComplexMatrix> state;
  std::optional<BasisSpec> family;
  std::optional<double> noise;
};

struct Scenario {
  WeightedEnsemble ensemble;
  std::optional<DensityState> state;
};

/// Schema-level parsing. Structural problems (missing fields, wrong types,
/// ragged matrices, "povms" together with "family") are ValidationErrors.
RawScenario parse_scenario(const nlohmann::json& doc);
RawScenario parse_scenario_text(const std::string& text);
/// Reads a file, or standard input for "-".
RawScenario read_scenario_file(const std::string& path);

/// Every semantic problem with the scenario, without throwing.
EnsembleDiagnostics diagnose(const RawScenario& raw);

/// Validated ensemble and state. Throws ValidationError carrying the
/// diagnostics summary when anything is wrong.
Scenario build_scenario(const RawScenario& raw);

/// Normalized form with explicit POVMs and weights; parse_scenario of the
/// result reproduces the same matrices bit for bit.
nlohmann::json scenario_to_json(const Scenario& s);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace weur::cli
