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

#include "noisycommit/noisy_observation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "affine.hpp"

namespace noisycommit {

using detail::row_payoff;

Channel::Channel(double w11, double w12, double w21, double w22)
    : w_{{{w11, w12}, {w21, w22}}} {
  if (auto msg = check_column_stochastic({w11, w12, w21, w22}); !msg.empty()) {
    throw InvalidArgument("channel: " + msg);
  }
}

double Channel::observation_probability(Action obs,
                                        const BinaryDist& leader) const {
  return (*this)(obs, Action::kA1) * leader.p1() +
         (*this)(obs, Action::kA2) * leader.p2();
}

std::string to_string(BRComponent c) {
  switch (c) {
    case BRComponent::kPureA1:
      return "PureA1";
    case BRComponent::kPureA2:
      return "PureA2";
    case BRComponent::kAnyMixed:
      return "AnyMixed";
  }
  return "?";
}

std::string to_string(Relevance r) {
  return r == Relevance::kIrrelevant ? "Irrelevant" : "Beneficial";
}

std::string to_string(RelevanceReason r) {
  switch (r) {
    case RelevanceReason::kDegenerateGame:
      return "DegenerateGame";
    case RelevanceReason::kUninformativeChannel:
      return "UninformativeChannel";
    case RelevanceReason::kInformativeChannel:
      return "InformativeChannel";
  }
  return "?";
}

BinaryDist to_dist(BRComponent c) {
  return BinaryDist::pure(c == BRComponent::kPureA2 ? Action::kA2
                                                    : Action::kA1);
}

PayoffMatrix component_matrix(const PayoffMatrix& u, const Channel& w,
                              Action obs) {
  const double c1 = w(obs, Action::kA1);
  const double c2 = w(obs, Action::kA2);
  return PayoffMatrix(u.u11() * c1, u.u12() * c2, u.u21() * c1, u.u22() * c2);
}

double s_value(const PayoffMatrix& u, const Channel& w,
               const BinaryDist& leader, Action obs) {
  return (u.u11() - u.u21()) * leader.p1() * w(obs, Action::kA1) +
         (u.u12() - u.u22()) * leader.p2() * w(obs, Action::kA2);
}

BRComponent best_response_component(const PayoffMatrix& u, const Channel& w,
                                    const BinaryDist& leader, Action obs) {
  return detail::classify_s(s_value(u, w, leader, obs));
}

BestResponse best_response(const PayoffMatrix& u, const Channel& w,
                           const BinaryDist& leader) {
  return {best_response_component(u, w, leader, Action::kA1),
          best_response_component(u, w, leader, Action::kA2)};
}

BinaryDist posterior(const Channel& w, const BinaryDist& leader, Action obs) {
  const double joint1 = w(obs, Action::kA1) * leader.p1();
  const double joint2 = w(obs, Action::kA2) * leader.p2();
  const double marginal = joint1 + joint2;
  if (!(marginal > 0.0)) {
    throw ZeroProbabilityObservation("observation " + to_string(obs) +
                                     " has zero probability");
  }
  const double q1 = joint1 / marginal;
  return BinaryDist::of(q1, 1.0 - q1);
}

double payoff_v(const PayoffMatrix& u, const Channel& w,
                const FollowerPolicy& policy, const BinaryDist& leader) {
  double total = 0.0;
  for (Action obs : kActions) {
    const BinaryDist& q = policy[obs];
    for (Action row : kActions) {
      total += q[row] * (u(row, Action::kA1) * w(obs, Action::kA1) * leader.p1() +
                         u(row, Action::kA2) * w(obs, Action::kA2) * leader.p2());
    }
  }
  return total;
}

std::optional<double> indifference_point(const PayoffMatrix& u,
                                         const Channel& w, Action obs) {
  const double num = (u.u22() - u.u12()) * w(obs, Action::kA2);
  const double den =
      (u.u11() - u.u21()) * w(obs, Action::kA1) + num;
  if (den == 0.0) return std::nullopt;
  return num / den;
}

double v_hat(const PayoffMatrix& u, const Channel& w,
             const BinaryDist& leader) {
  double total = 0.0;
  for (Action obs : kActions) {
    total += std::max(row_payoff(u, w, obs, Action::kA1, leader.p1()),
                      row_payoff(u, w, obs, Action::kA2, leader.p1()));
  }
  return total;
}

namespace {

// Breakpoint candidates in evaluation order. Indifference points come first
// so that ties with the endpoints resolve to a commitment at which the
// follower is indifferent.
std::vector<double> equilibrium_candidates(const PayoffMatrix& u,
                                           const Channel& w) {
  std::vector<double> out;
  for (Action obs : kActions) {
    if (auto p = indifference_point(u, w, obs); p && *p >= 0.0 && *p <= 1.0) {
      out.push_back(*p);
    }
  }
  out.push_back(0.0);
  out.push_back(1.0);
  return out;
}

// Payoff-maximizing action after `obs`; ties go to a1.
Action maximizing_row(const PayoffMatrix& u, const Channel& w, Action obs,
                      double p1) {
  return row_payoff(u, w, obs, Action::kA1, p1) >=
                 row_payoff(u, w, obs, Action::kA2, p1)
             ? Action::kA1
             : Action::kA2;
}

}  // namespace

Equilibrium leader_equilibrium(const PayoffMatrix& u, const Channel& w) {
  double best_p1 = 0.0;
  double best_value = 0.0;
  bool first = true;
  for (double p1 : equilibrium_candidates(u, w)) {
    const double value = v_hat(u, w, BinaryDist(p1));
    if (first || value < best_value) {
      best_p1 = p1;
      best_value = value;
      first = false;
    }
  }

  Equilibrium eq;
  eq.leader_commitment = BinaryDist(best_p1);
  eq.value = best_value;
  const BestResponse br = best_response(u, w, eq.leader_commitment);
  detail::PurePolicy choice{};
  for (Action obs : kActions) {
    const BRComponent c = br[index(obs)];
    if (c == BRComponent::kAnyMixed) {
      choice[index(obs)] = maximizing_row(u, w, obs, best_p1);
      if (!eq.indifferent_observation) eq.indifferent_observation = obs;
    } else {
      choice[index(obs)] =
          c == BRComponent::kPureA1 ? Action::kA1 : Action::kA2;
    }
  }
  eq.follower_policy = detail::to_policy(choice);
  return eq;
}

BoundChain payoff_bounds(const PayoffMatrix& u, const Channel& w,
                         const BinaryDist& leader) {
  BoundChain chain;
  chain.ne_value = nash(u).value;
  chain.u_hat_value = u_hat(u, leader);
  chain.v_hat_value = v_hat(u, w, leader);
  chain.upper_bound = leader.p1() * std::max(u.u11(), u.u21()) +
                      leader.p2() * std::max(u.u12(), u.u22());
  return chain;
}

RelevanceReport observation_relevance(const PayoffMatrix& u,
                                      const Channel& w) {
  RelevanceReport report;
  report.game_class = classify(u);
  report.channel_det = w.det();
  report.fully_revealing = std::abs(std::abs(report.channel_det) - 1.0) <= kEps;
  report.ne_value = nash(u).value;
  report.equilibrium_value = leader_equilibrium(u, w).value;
  report.minmax_pure_value = minmax_pure(u);
  if (report.game_class == GameClass::kDegenerateNE) {
    report.verdict = Relevance::kIrrelevant;
    report.reason = RelevanceReason::kDegenerateGame;
  } else if (std::abs(report.channel_det) <= kEps) {
    report.verdict = Relevance::kIrrelevant;
    report.reason = RelevanceReason::kUninformativeChannel;
  } else {
    report.verdict = Relevance::kBeneficial;
    report.reason = RelevanceReason::kInformativeChannel;
  }
  return report;
}

}  // namespace noisycommit
