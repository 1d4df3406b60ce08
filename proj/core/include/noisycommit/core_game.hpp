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

// The plain 2x2 zero-sum game without observations: expected payoff,
// classification of the equilibrium structure, and closed-form solutions.

#ifndef NOISYCOMMIT_CORE_GAME_HPP_
#define NOISYCOMMIT_CORE_GAME_HPP_

#include "noisycommit/types.hpp"

namespace noisycommit {

enum class GameClass {
  // Unique Nash equilibrium, strictly mixed for both players.
  kUniqueMixedNE,
  // Dominance, a pure saddle point, or a continuum of equilibria.
  kDegenerateNE,
};

std::string to_string(GameClass c);

struct NESolution {
  BinaryDist follower_strategy;
  BinaryDist leader_strategy;
  double value = 0.0;
  GameClass game_class = GameClass::kDegenerateNE;
};

// Sum over (i, j) of Q(a_i) P(a_j) u_ij. The follower plays Q, the leader P.
double expected_payoff(const PayoffMatrix& u, const BinaryDist& follower,
                       const BinaryDist& leader);

// Mixed iff (u11-u12)(u22-u21) > 0 and (u11-u21)(u22-u12) > 0, compared
// exactly against zero.
GameClass classify(const PayoffMatrix& u);

// One Nash equilibrium and the (unique) game value. In the degenerate case
// the profile is the lexicographically first pure saddle point.
NESolution nash(const PayoffMatrix& u);

// min{max{u11, u21}, max{u12, u22}}: the leader's payoff when committing to
// a pure strategy against a follower who sees it.
double minmax_pure(const PayoffMatrix& u);

// Follower's best payoff against a known leader strategy:
// max{u11 P1 + u12 P2, u21 P1 + u22 P2}.
double u_hat(const PayoffMatrix& u, const BinaryDist& leader);

}  // namespace noisycommit

#endif  // NOISYCOMMIT_CORE_GAME_HPP_
