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

#include "noisycommit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "affine.hpp"

namespace noisycommit {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t replication,
                          SamplingSite site) {
  std::uint64_t z = seed + (3 * replication + static_cast<std::uint64_t>(site) + 1) *
                               0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t replication, SamplingSite site)
      : engine_(stream_seed(seed, replication, site)) {}

  // a1 with probability p.
  Action sample(const BinaryDist& dist) {
    const double draw = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return draw < dist.p1() ? Action::kA1 : Action::kA2;
  }

 private:
  std::mt19937_64 engine_;
};

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

ActionCounts play(const SimConfig& cfg, std::uint64_t replication) {
  Stream leader(cfg.seed, replication, SamplingSite::kLeaderAction);
  Stream channel(cfg.seed, replication, SamplingSite::kObservation);
  Stream follower(cfg.seed, replication, SamplingSite::kFollowerAction);
  const std::array<BinaryDist, 2> columns = {
      BinaryDist::of(cfg.channel(Action::kA1, Action::kA1),
                     cfg.channel(Action::kA2, Action::kA1)),
      BinaryDist::of(cfg.channel(Action::kA1, Action::kA2),
                     cfg.channel(Action::kA2, Action::kA2))};

  ActionCounts counts{};
  for (std::uint64_t round = 0; round < cfg.rounds; ++round) {
    const Action b = leader.sample(cfg.leader_commitment);
    const Action seen = channel.sample(columns[index(b)]);
    const Action a = follower.sample(cfg.follower_policy[seen]);
    ++counts[index(b)][index(seen)][index(a)];
  }
  return counts;
}

void accumulate(ActionCounts& into, const ActionCounts& from) {
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t o = 0; o < 2; ++o) {
      for (std::size_t a = 0; a < 2; ++a) into[b][o][a] += from[b][o][a];
    }
  }
}

}  // namespace

SimResult summarize(const PayoffMatrix& u, const ActionCounts& counts,
                    std::uint64_t seed) {
  SimResult result;
  result.seed = seed;
  result.action_counts = counts;

  // Payoff per (leader action, follower action) cell.
  std::array<std::array<std::uint64_t, 2>, 2> cell{};
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t o = 0; o < 2; ++o) {
      for (std::size_t a = 0; a < 2; ++a) cell[a][b] += counts[b][o][a];
    }
  }
  std::uint64_t n = 0;
  double reference = 0.0;
  bool have_reference = false;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      n += cell[a][b];
      if (!have_reference && cell[a][b] > 0) {
        reference = u(a, b);
        have_reference = true;
      }
    }
  }
  result.rounds = n;
  if (n == 0) return result;

  // Offsets from an attained payoff keep a constant game exact.
  CompensatedSum offset;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      offset.add(static_cast<double>(cell[a][b]) * (u(a, b) - reference));
    }
  }
  const double nd = static_cast<double>(n);
  result.mean_payoff = reference + offset.value() / nd;

  if (n > 1) {
    CompensatedSum squares;
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        const double d = u(a, b) - result.mean_payoff;
        squares.add(static_cast<double>(cell[a][b]) * d * d);
      }
    }
    const double variance = std::max(0.0, squares.value() / (nd - 1.0));
    result.std_error = std::sqrt(variance / nd);
  }
  return result;
}

SimResult simulate(const PayoffMatrix& u, const SimConfig& cfg) {
  if (cfg.rounds < 1) throw InvalidArgument("rounds must be at least 1");
  return summarize(u, play(cfg, 0), cfg.seed);
}

SimResult simulate_replications(const PayoffMatrix& u, const SimConfig& cfg,
                                std::uint64_t replications, unsigned threads) {
  if (cfg.rounds < 1) throw InvalidArgument("rounds must be at least 1");
  if (replications < 1) {
    throw InvalidArgument("replications must be at least 1");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, replications));

  std::vector<ActionCounts> per_replication(replications);
  {
    std::vector<std::jthread> workers;
    for (unsigned worker = 0; worker < threads; ++worker) {
      workers.emplace_back([&, worker] {
        for (std::uint64_t r = worker; r < replications; r += threads) {
          per_replication[r] = play(cfg, r);
        }
      });
    }
  }
  // Integer counts pool exactly, in any order.
  ActionCounts total{};
  for (const ActionCounts& c : per_replication) accumulate(total, c);
  return summarize(u, total, cfg.seed);
}

ValidationReport validate_against_theory(
    const PayoffMatrix& u, const Channel& w, const std::optional<Distortion>& t,
    const BinaryDist& leader, const std::optional<FollowerPolicy>& policy,
    std::uint64_t rounds, std::uint64_t seed) {
  ValidationReport report;
  if (policy) {
    report.policy = *policy;
  } else {
    const BinaryDist seen = t ? distort(*t, leader) : leader;
    const BestResponse br = best_response(u, w, seen);
    const bool unique = br[0] != BRComponent::kAnyMixed &&
                        br[1] != BRComponent::kAnyMixed;
    if (t && !unique && !v_tilde(u, w, *t, leader).is_point()) {
      throw TheoryIntervalAmbiguous(
          "the follower is indifferent under the distorted commitment and "
          "the payoff depends on its choice; pass an explicit policy");
    }
    detail::PurePolicy choice{};
    for (Action obs : kActions) {
      const BRComponent c = br[index(obs)];
      if (c == BRComponent::kAnyMixed) {
        choice[index(obs)] =
            detail::row_payoff(u, w, obs, Action::kA1, leader.p1()) >=
                    detail::row_payoff(u, w, obs, Action::kA2, leader.p1())
                ? Action::kA1
                : Action::kA2;
      } else {
        choice[index(obs)] =
            c == BRComponent::kPureA1 ? Action::kA1 : Action::kA2;
      }
    }
    report.policy = detail::to_policy(choice);
  }

  report.theory = payoff_v(u, w, report.policy, leader);
  SimConfig cfg;
  cfg.rounds = rounds;
  cfg.seed = seed;
  cfg.leader_commitment = leader;
  cfg.follower_policy = report.policy;
  cfg.channel = w;
  cfg.distortion = t;
  report.sim = simulate(u, cfg);
  report.deviation = std::abs(report.sim.mean_payoff - report.theory);
  report.tolerance = kValidationSigmas * report.sim.std_error;
  report.passed = report.deviation <= report.tolerance + 1e-12;
  return report;
}

}  // namespace noisycommit
