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

#ifndef NOISYCOMMIT_CLI_GAME_SPEC_HPP_
#define NOISYCOMMIT_CLI_GAME_SPEC_HPP_

#include <optional>
#include <string>

#include "noisycommit/commitment_mismatch.hpp"
#include "noisycommit/noisy_observation.hpp"
#include "noisycommit/types.hpp"
#include <nlohmann/json.hpp>

namespace noisycommit::cli {

// A game instance as read from a spec file:
//
//   {
//     "payoff":     [[u11, u12], [u21, u22]],
//     "channel":    [[w11, w12], [w21, w22]],
//     "distortion": [[t11, t12], [t21, t22]]     (optional)
//   }
//
// Matrices are row-major; channel and distortion are column-stochastic.
struct GameSpec {
  PayoffMatrix payoff;
  Channel channel;
  std::optional<Distortion> distortion;
};

// Raised for malformed or invalid specs. The message names the field.
class SpecError : public Error {
 public:
  using Error::Error;
};

GameSpec parse_game_spec(const nlohmann::json& doc);
GameSpec parse_game_spec_text(const std::string& text);
GameSpec load_game_spec(const std::string& path);

nlohmann::json to_json(const GameSpec& spec);

}  // namespace noisycommit::cli

#endif  // NOISYCOMMIT_CLI_GAME_SPEC_HPP_
