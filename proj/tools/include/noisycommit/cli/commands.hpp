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

#ifndef NOISYCOMMIT_CLI_COMMANDS_HPP_
#define NOISYCOMMIT_CLI_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "noisycommit/cli/game_spec.hpp"
#include "noisycommit/noisycommit.hpp"
#include <nlohmann/json.hpp>

namespace noisycommit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitIoFailure = 3;
inline constexpr int kExitAmbiguousTheory = 4;

// Fixed CSV header of `sweep`.
inline constexpr const char* kSweepHeader =
    "p_a1,u_hat,v_hat,v_tilde_lo,v_tilde_hi,omega,breakpoint";

struct SweepRow {
  double p_a1 = 0.0;
  double u_hat = 0.0;
  double v_hat = 0.0;
  std::optional<double> v_tilde_lo;
  std::optional<double> v_tilde_hi;
  std::optional<double> omega;
  // Empty for grid rows; "P1", "P2", "Pt1" or "Pt2" for breakpoint rows.
  std::string breakpoint;
};

// `grid` evenly spaced rows over [0, 1] followed by one row per breakpoint
// that lies in [0, 1]. Requires grid >= 2.
std::vector<SweepRow> sweep_rows(const GameSpec& spec, int grid);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Shortest decimal that parses back to the same double.
std::string format_roundtrip(double x);

nlohmann::json ne_report(const GameSpec& spec);
nlohmann::json equilibrium_report(const GameSpec& spec);
nlohmann::json mismatch_report(const GameSpec& spec, std::optional<double> eps);
nlohmann::json simulation_report(const ValidationReport& report,
                                 const BinaryDist& leader);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace noisycommit::cli

#endif  // NOISYCOMMIT_CLI_COMMANDS_HPP_
