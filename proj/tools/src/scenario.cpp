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

#include "scenario.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "format.hpp"

namespace weur::cli {
namespace {

using nlohmann::json;

Complex entry_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ValidationError(where + ": matrix entries must be numbers or [re, im] pairs");
}

ComplexVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a non-empty list");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = entry_from_json(j[i], where);
  }
  return v;
}

double angle_from_json(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get<std::string>());
  throw ValidationError(std::string("family.") + key + " must be a number or a string");
}

int int_from_json(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ValidationError(std::string("family.") + key + " must be an integer");
  return v.get<int>();
}

BasisSpec family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.at("name").is_string()) {
    throw ValidationError("family must be an object with a string \"name\"");
  }
  BasisSpec spec;
  spec.family = parse_family(j.at("name").get<std::string>());
  spec.beta1 = angle_from_json(j, "beta1", 0.0);
  spec.beta2 = angle_from_json(j, "beta2", 0.0);
  spec.beta = angle_from_json(j, "beta", 0.0);
  spec.d = int_from_json(j, "d", spec.family == BasisSpec::Family::kQutritFour ? 3 : 2);
  spec.count = int_from_json(j, "count", 3);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ValidationError("family.seed must be a non-negative integer");
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("phase")) {
    const std::string p = j.at("phase").is_string() ? j.at("phase").get<std::string>() : "";
    if (p == "repeated") {
      spec.phase = QutritPhase::kRepeated;
    } else if (p == "linear") {
      spec.phase = QutritPhase::kLinear;
    } else {
      throw ValidationError("family.phase must be \"repeated\" or \"linear\"");
    }
  }
  if (j.contains("directions")) {
    const json& dirs = j.at("directions");
    if (!dirs.is_array()) throw ValidationError("family.directions must be a list");
    for (const auto& d : dirs) {
      if (!d.is_array() || d.size() != 3) {
        throw ValidationError("family.directions entries must be [x, y, z]");
      }
      BlochVector n{};
      for (std::size_t k = 0; k < 3; ++k) {
        if (!d[k].is_number()) throw ValidationError("family.directions entries must be numeric");
        n[k] = d[k].get<double>();
      }
      spec.directions.push_back(n);
    }
  }
  return spec;
}

std::vector<std::vector<ComplexMatrix>> effects_of(const WeightedEnsemble& e) {
  std::vector<std::vector<ComplexMatrix>> out;
  for (const auto& m : e.povms()) out.push_back(m.effects());
  return out;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].empty()) throw ValidationError(where + ": rows must be lists");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) throw ValidationError(where + ": ragged matrix");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry_from_json(j[r][c], where);
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

RawScenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ValidationError("scenario must be a JSON object");
  RawScenario raw;
  if (doc.contains("dimension")) {
    if (!doc.at("dimension").is_number_integer()) throw ValidationError("dimension must be an integer");
    raw.dimension = doc.at("dimension").get<int>();
  }
  const bool has_povms = doc.contains("povms");
  const bool has_family = doc.contains("family");
  if (has_povms == has_family) {
    throw ValidationError("scenario needs exactly one of \"povms\" and \"family\"");
  }
  if (has_povms) {
    if (!raw.dimension) throw ValidationError("dimension is required with explicit povms");
    const json& povms = doc.at("povms");
    if (!povms.is_array()) throw ValidationError("povms must be a list");
    for (std::size_t t = 0; t < povms.size(); ++t) {
      const std::string where = "povm " + std::to_string(t);
      if (!povms[t].is_array()) throw ValidationError(where + ": must be a list of effects");
      std::vector<ComplexMatrix> effects;
      for (std::size_t i = 0; i < povms[t].size(); ++i) {
        effects.push_back(matrix_from_json(povms[t][i], where + " effect " + std::to_string(i)));
      }
      raw.povms.push_back(std::move(effects));
    }
  } else {
    raw.family = family_from_json(doc.at("family"));
  }
  if (doc.contains("weights")) {
    const json& w = doc.at("weights");
    if (!w.is_array()) throw ValidationError("weights must be a list");
    std::vector<double> ws;
    for (const auto& x : w) {
      if (!x.is_number()) throw ValidationError("weights must be numbers");
      ws.push_back(x.get<double>());
    }
    raw.weights = std::move(ws);
  }
  if (doc.contains("state") && doc.contains("state_vector")) {
    throw ValidationError("give at most one of \"state\" and \"state_vector\"");
  }
  if (doc.contains("state")) raw.state = matrix_from_json(doc.at("state"), "state");
  if (doc.contains("state_vector")) {
    const ComplexVector psi = vector_from_json(doc.at("state_vector"), "state_vector");
    const double norm = psi.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("state_vector must be non-zero");
    raw.state = (psi / norm) * (psi / norm).adjoint();
  }
  if (doc.contains("noise")) {
    if (!doc.at("noise").is_number()) throw ValidationError("noise must be a number");
    raw.noise = doc.at("noise").get<double>();
  }
  return raw;
}

RawScenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

RawScenario read_scenario_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
    buf << in.rdbuf();
  }
  return parse_scenario_text(buf.str());
}

EnsembleDiagnostics diagnose(const RawScenario& raw) {
  std::vector<std::vector<ComplexMatrix>> povms = raw.povms;
  std::vector<Diagnostic> extra;
  if (raw.family) {
    try {
      povms = effects_of(make_ensemble(*raw.family));
    } catch (const ValidationError& e) {
      extra.push_back({"family", e.what(), -1, -1});
    }
  }
  std::vector<double> weights = raw.weights.value_or(
      std::vector<double>(povms.size(), povms.empty() ? 0.0 : 1.0 / static_cast<double>(povms.size())));

  EnsembleDiagnostics diag;
  if (extra.empty()) diag = validate_ensemble(povms, weights);
  for (auto& d : extra) diag.failures.push_back(std::move(d));

  if (raw.dimension) {
    if (*raw.dimension < 1 || *raw.dimension > kMaxDimension) {
      diag.failures.push_back({"dimension", "dimension must lie in [1, 64]", -1, -1});
    }
    for (std::size_t t = 0; t < povms.size(); ++t) {
      if (!povms[t].empty() && povms[t].front().rows() != *raw.dimension) {
        diag.failures.push_back({"dimension_field",
                                 "povm " + std::to_string(t) + ": does not match \"dimension\"",
                                 static_cast<int>(t), -1});
      }
    }
  }
  if (raw.noise && !(*raw.noise >= 0.0 && *raw.noise <= 1.0)) {
    diag.failures.push_back({"noise", "noise visibility must lie in [0, 1]", -1, -1});
  }
  if (raw.state) {
    try {
      const DensityState s(*raw.state);
      if (!povms.empty() && !povms.front().empty() && s.dim() != povms.front().front().rows()) {
        diag.failures.push_back({"state_dimension", "state dimension does not match the POVMs", -1, -1});
      }
    } catch (const ValidationError& e) {
      diag.failures.push_back({"state", e.what(), -1, -1});
    }
  }
  return diag;
}

Scenario build_scenario(const RawScenario& raw) {
  const auto diag = diagnose(raw);
  if (!diag.ok()) throw ValidationError(diag.summary());

  std::vector<Povm> povms;
  if (raw.family) {
    const auto e = make_ensemble(*raw.family);
    povms = e.povms();
  } else {
    for (const auto& effects : raw.povms) povms.emplace_back(effects);
  }
  if (raw.noise) {
    for (auto& m : povms) m = add_white_noise(m, *raw.noise);
  }
  std::optional<DensityState> state;
  if (raw.state) state.emplace(*raw.state);
  if (raw.weights) return {WeightedEnsemble(std::move(povms), *raw.weights), std::move(state)};
  return {WeightedEnsemble::uniform(std::move(povms)), std::move(state)};
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["dimension"] = s.ensemble.dim();
  json povms = json::array();
  for (const auto& m : s.ensemble.povms()) {
    json effects = json::array();
    for (const auto& e : m.effects()) effects.push_back(matrix_to_json(e));
    povms.push_back(std::move(effects));
  }
  doc["povms"] = std::move(povms);
  doc["weights"] = s.ensemble.weights();
  if (s.state) doc["state"] = matrix_to_json(s.state->matrix());
  return doc;
}

}  // namespace weur::cli
