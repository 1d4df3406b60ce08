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

// Monte Carlo play of the repeated game.
//
// Randomness. Every sampling site owns an independent std::mt19937_64
// stream. The 64-bit seed of the stream for site s in replication r is
//
//   z = seed + (3 r + s + 1) * 0x9E3779B97F4A7C15   (mod 2^64)
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   stream_seed = z ^ (z >> 31)
//
// i.e. the SplitMix64 output for counter 3r+s+1. Sites are s = 0 (leader's
// action), s = 1 (channel output), s = 2 (follower's action). A uniform
// draw is (engine() >> 11) * 2^-53, and an action is a1 iff the draw is
// below its probability. Results are therefore bit-reproducible across
// standard libraries.

#ifndef NOISYCOMMIT_SIMULATOR_HPP_
#define NOISYCOMMIT_SIMULATOR_HPP_

#include <array>
#include <cstdint>
#include <optional>

#include "noisycommit/commitment_mismatch.hpp"
#include "noisycommit/noisy_observation.hpp"

namespace noisycommit {

enum class SamplingSite : std::uint64_t {
  kLeaderAction = 0,
  kObservation = 1,
  kFollowerAction = 2,
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t replication,
                          SamplingSite site);

struct SimConfig {
  std::uint64_t rounds = 1;
  std::uint64_t seed = 0;
  BinaryDist leader_commitment;
  FollowerPolicy follower_policy;
  Channel channel = Channel::identity();
  // Informational only: the policy must already respond to the distorted
  // commitment. Sampling never consults it.
  std::optional<Distortion> distortion;
};

// counts[leader action][observation][follower action].
using ActionCounts = std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2>;

struct SimResult {
  double mean_payoff = 0.0;
  double std_error = 0.0;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  ActionCounts action_counts{};
};

// Plays cfg.rounds independent repetitions (replication 0).
SimResult simulate(const PayoffMatrix& u, const SimConfig& cfg);

// Runs `replications` independent replications of cfg.rounds each, on up to
// `threads` workers, and pools them. The result does not depend on the
// number of threads.
SimResult simulate_replications(const PayoffMatrix& u, const SimConfig& cfg,
                                std::uint64_t replications,
                                unsigned threads = 0);

// Mean and standard error recomputed from pooled counts.
SimResult summarize(const PayoffMatrix& u, const ActionCounts& counts,
                    std::uint64_t seed);

class TheoryIntervalAmbiguous : public Error {
 public:
  using Error::Error;
};

struct ValidationReport {
  bool passed = false;
  double theory = 0.0;
  double deviation = 0.0;  // |mean - theory|
  double tolerance = 0.0;  // 5 standard errors
  FollowerPolicy policy;
  SimResult sim;
};

// Simulates and compares the empirical mean with the analytic payoff.
// Without an explicit policy the follower best-responds to the (distorted)
// commitment, indifference broken toward the payoff-maximizing action; if
// that leaves the payoff ambiguous under a distortion the call throws
// TheoryIntervalAmbiguous.
ValidationReport validate_against_theory(
    const PayoffMatrix& u, const Channel& w, const std::optional<Distortion>& t,
    const BinaryDist& leader, const std::optional<FollowerPolicy>& policy,
    std::uint64_t rounds, std::uint64_t seed);

// Number of standard errors allowed by validate_against_theory.
inline constexpr double kValidationSigmas = 5.0;

}  // namespace noisycommit

#endif  // NOISYCOMMIT_SIMULATOR_HPP_
