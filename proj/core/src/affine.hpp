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

// Affine building blocks shared by the solvers. They take P(a1) as a plain
// real so that region representatives outside [0, 1] can be evaluated.

#ifndef NOISYCOMMIT_SRC_AFFINE_HPP_
#define NOISYCOMMIT_SRC_AFFINE_HPP_

#include <array>

#include "noisycommit/noisy_observation.hpp"

namespace noisycommit::detail {

// Contribution of observation `obs` to the payoff when the follower answers
// it with `row`: u(row,1) p1 w(obs,1) + u(row,2) (1-p1) w(obs,2).
inline double row_payoff(const PayoffMatrix& u, const Channel& w, Action obs,
                         Action row, double p1) {
  return u(row, Action::kA1) * p1 * w(obs, Action::kA1) +
         u(row, Action::kA2) * (1.0 - p1) * w(obs, Action::kA2);
}

inline double s_raw(const PayoffMatrix& u, const Channel& w, double p1,
                    Action obs) {
  return (u.u11() - u.u21()) * p1 * w(obs, Action::kA1) +
         (u.u12() - u.u22()) * (1.0 - p1) * w(obs, Action::kA2);
}

inline BRComponent classify_s(double s) {
  if (s > kEps) return BRComponent::kPureA1;
  if (s < -kEps) return BRComponent::kPureA2;
  return BRComponent::kAnyMixed;
}

// A deterministic follower policy: the action played after each observation.
using PurePolicy = std::array<Action, 2>;

inline double pure_policy_payoff(const PayoffMatrix& u, const Channel& w,
                                 const PurePolicy& policy, double p1) {
  return row_payoff(u, w, Action::kA1, policy[0], p1) +
         row_payoff(u, w, Action::kA2, policy[1], p1);
}

inline FollowerPolicy to_policy(const PurePolicy& policy) {
  return {BinaryDist::pure(policy[0]), BinaryDist::pure(policy[1])};
}

}  // namespace noisycommit::detail

#endif  // NOISYCOMMIT_SRC_AFFINE_HPP_
