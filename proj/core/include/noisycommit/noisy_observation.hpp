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

// The game with noisy observations of the leader's action: the follower sees
// the commitment and the realized action through a binary channel.

#ifndef NOISYCOMMIT_NOISY_OBSERVATION_HPP_
#define NOISYCOMMIT_NOISY_OBSERVATION_HPP_

#include <array>
#include <optional>

#include "noisycommit/core_game.hpp"
#include "noisycommit/types.hpp"

namespace noisycommit {

// Column-stochastic observation matrix: entry (i, j) is the probability that
// the follower observes a_i when the leader played a_j.
class Channel {
 public:
  // Row-major entries. Throws InvalidArgument unless every column is a
  // probability vector.
  Channel(double w11, double w12, double w21, double w22);

  static Channel identity() { return Channel(1.0, 0.0, 0.0, 1.0); }
  // Binary symmetric channel with crossover probability `flip`.
  static Channel symmetric(double flip) {
    return Channel(1.0 - flip, flip, flip, 1.0 - flip);
  }

  double operator()(Action observed, Action played) const {
    return w_[index(observed)][index(played)];
  }

  // det w = w11 - w12 = w22 - w21 for a column-stochastic matrix.
  double det() const { return w_[0][0] * w_[1][1] - w_[0][1] * w_[1][0]; }

  // Probability of observing `obs` when the leader commits to `leader`.
  double observation_probability(Action obs, const BinaryDist& leader) const;

 private:
  std::array<std::array<double, 2>, 2> w_;
};

// The follower's best-response set for one observation.
enum class BRComponent { kPureA1, kPureA2, kAnyMixed };

std::string to_string(BRComponent c);

// Indexed by observation.
using BestResponse = std::array<BRComponent, 2>;

struct FollowerPolicy {
  BinaryDist on_obs_a1;
  BinaryDist on_obs_a2;

  const BinaryDist& operator[](Action obs) const {
    return obs == Action::kA1 ? on_obs_a1 : on_obs_a2;
  }
};

struct Equilibrium {
  BinaryDist leader_commitment;
  FollowerPolicy follower_policy;
  double value = 0.0;
  // The observation after which the follower is indifferent at the
  // commitment, if any.
  std::optional<Action> indifferent_observation;
};

struct BoundChain {
  double ne_value = 0.0;
  double u_hat_value = 0.0;
  double v_hat_value = 0.0;
  double upper_bound = 0.0;
};

enum class Relevance { kIrrelevant, kBeneficial };
enum class RelevanceReason {
  kDegenerateGame,
  kUninformativeChannel,
  kInformativeChannel,
};

std::string to_string(Relevance r);
std::string to_string(RelevanceReason r);

struct RelevanceReport {
  Relevance verdict = Relevance::kIrrelevant;
  RelevanceReason reason = RelevanceReason::kDegenerateGame;
  GameClass game_class = GameClass::kDegenerateNE;
  double channel_det = 0.0;
  // |det w| = 1: the observation reveals the action, and the equilibrium
  // value is then the pure minmax.
  bool fully_revealing = false;
  double ne_value = 0.0;
  double equilibrium_value = 0.0;
  double minmax_pure_value = 0.0;
};

// u diag(w(i,1), w(i,2)): column j of u scaled by the likelihood of
// observing a_i given a_j.
PayoffMatrix component_matrix(const PayoffMatrix& u, const Channel& w,
                              Action obs);

// Payoff difference between playing a1 and a2 after observing `obs`,
// weighted by the probability of that observation.
double s_value(const PayoffMatrix& u, const Channel& w,
               const BinaryDist& leader, Action obs);

BRComponent best_response_component(const PayoffMatrix& u, const Channel& w,
                                    const BinaryDist& leader, Action obs);

BestResponse best_response(const PayoffMatrix& u, const Channel& w,
                           const BinaryDist& leader);

class ZeroProbabilityObservation : public Error {
 public:
  using Error::Error;
};

// Bayes posterior on the leader's action after observing `obs`.
// Throws ZeroProbabilityObservation if `obs` cannot occur.
BinaryDist posterior(const Channel& w, const BinaryDist& leader, Action obs);

// Expected payoff when the leader commits to `leader` and the follower plays
// `policy` as a function of its observation.
double payoff_v(const PayoffMatrix& u, const Channel& w,
                const FollowerPolicy& policy, const BinaryDist& leader);

// The commitment probability P(a1) at which the follower is indifferent
// after observing `obs`. Absent when s_value does not depend on P(a1) in a
// way that crosses zero (zero denominator). May lie outside [0, 1].
std::optional<double> indifference_point(const PayoffMatrix& u,
                                         const Channel& w, Action obs);

// Leader's payoff when the follower best-responds to each observation.
double v_hat(const PayoffMatrix& u, const Channel& w, const BinaryDist& leader);

// Minimizes v_hat over the breakpoints {0, 1, P^(1), P^(2)} ∩ [0, 1].
// Where the follower is indifferent it plays the action that maximizes the
// payoff (ties toward a1).
Equilibrium leader_equilibrium(const PayoffMatrix& u, const Channel& w);

BoundChain payoff_bounds(const PayoffMatrix& u, const Channel& w,
                         const BinaryDist& leader);

RelevanceReport observation_relevance(const PayoffMatrix& u, const Channel& w);

// Pure strategy for a pure component; a1 for kAnyMixed.
BinaryDist to_dist(BRComponent c);

}  // namespace noisycommit

#endif  // NOISYCOMMIT_NOISY_OBSERVATION_HPP_
