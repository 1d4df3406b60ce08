// Copyright 2026 The noisycommit Authors.
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

#include "noisycommit/cli/game_spec.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace noisycommit::cli {

using nlohmann::json;

namespace {

std::array<double, 4> read_matrix(const json& doc, const std::string& field) {
  if (!doc.contains(field)) {
    throw SpecError(field + ": missing");
  }
  const json& m = doc.at(field);
  if (!m.is_array() || m.size() != 2) {
    throw SpecError(field + ": expected a 2x2 array [[a, b], [c, d]]");
  }
  std::array<double, 4> out{};
  for (std::size_t r = 0; r < 2; ++r) {
    if (!m[r].is_array() || m[r].size() != 2) {
      throw SpecError(field + "[" + std::to_string(r) +
                      "]: expected a row of two numbers");
    }
    for (std::size_t c = 0; c < 2; ++c) {
      if (!m[r][c].is_number()) {
        throw SpecError(field + "[" + std::to_string(r) + "][" +
                        std::to_string(c) + "]: expected a number");
      }
      out[2 * r + c] = m[r][c].get<double>();
    }
  }
  return out;
}

json matrix_json(double a, double b, double c, double d) {
  return json::array({json::array({a, b}), json::array({c, d})});
}

}  // namespace

GameSpec parse_game_spec(const json& doc) {
  if (!doc.is_object()) throw SpecError("spec: expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "payoff" && key != "channel" && key != "distortion") {
      throw SpecError(key + ": unknown field");
    }
  }
  const auto u = read_matrix(doc, "payoff");
  const auto w = read_matrix(doc, "channel");
  try {
    GameSpec spec{PayoffMatrix(u[0], u[1], u[2], u[3]),
                  Channel(w[0], w[1], w[2], w[3]), std::nullopt};
    if (doc.contains("distortion") && !doc.at("distortion").is_null()) {
      const auto t = read_matrix(doc, "distortion");
      spec.distortion.emplace(t[0], t[1], t[2], t[3]);
    }
    return spec;
  } catch (const InvalidArgument& e) {
    throw SpecError(e.what());
  }
}

GameSpec parse_game_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec: invalid JSON: ") + e.what());
  }
  return parse_game_spec(doc);
}

GameSpec load_game_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("spec: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game_spec_text(buf.str());
}

json to_json(const GameSpec& spec) {
  const PayoffMatrix& u = spec.payoff;
  const Channel& w = spec.channel;
  json doc;
  doc["payoff"] = matrix_json(u.u11(), u.u12(), u.u21(), u.u22());
  doc["channel"] = matrix_json(w(Action::kA1, Action::kA1),
                               w(Action::kA1, Action::kA2),
                               w(Action::kA2, Action::kA1),
                               w(Action::kA2, Action::kA2));
  if (spec.distortion) {
    const Distortion& t = *spec.distortion;
    doc["distortion"] = matrix_json(t(0, 0), t(0, 1), t(1, 0), t(1, 1));
  }
  return doc;
}

}  // namespace noisycommit::cli
