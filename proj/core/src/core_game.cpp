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

#include "noisycommit/core_game.hpp"

#include <algorithm>
#include <optional>

namespace noisycommit {

std::string to_string(GameClass c) {
  return c == GameClass::kUniqueMixedNE ? "UniqueMixedNE" : "DegenerateNE";
}

double expected_payoff(const PayoffMatrix& u, const BinaryDist& follower,
                       const BinaryDist& leader) {
  double total = 0.0;
  for (Action i : kActions) {
    for (Action j : kActions) {
      total += follower[i] * leader[j] * u(i, j);
    }
  }
  return total;
}

GameClass classify(const PayoffMatrix& u) {
  const double a = (u.u11() - u.u12()) * (u.u22() - u.u21());
  const double b = (u.u11() - u.u21()) * (u.u22() - u.u12());
  return (a > 0.0 && b > 0.0) ? GameClass::kUniqueMixedNE
                              : GameClass::kDegenerateNE;
}

double minmax_pure(const PayoffMatrix& u) {
  return std::min(std::max(u.u11(), u.u21()), std::max(u.u12(), u.u22()));
}

double u_hat(const PayoffMatrix& u, const BinaryDist& leader) {
  return std::max(u.u11() * leader.p1() + u.u12() * leader.p2(),
                  u.u21() * leader.p1() + u.u22() * leader.p2());
}

namespace {

// (row, col) is a saddle point when the follower cannot gain by switching
// rows and the leader cannot gain by switching columns.
bool is_pure_saddle(const PayoffMatrix& u, Action row, Action col) {
  return u(row, col) >= u(other(row), col) && u(row, col) <= u(row, other(col));
}

std::optional<NESolution> first_pure_saddle(const PayoffMatrix& u) {
  for (Action row : kActions) {
    for (Action col : kActions) {
      if (is_pure_saddle(u, row, col)) {
        return NESolution{BinaryDist::pure(row), BinaryDist::pure(col),
                          u(row, col), GameClass::kDegenerateNE};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NESolution nash(const PayoffMatrix& u) {
  if (classify(u) == GameClass::kUniqueMixedNE) {
    const double d = u.cross_sum();
    const double q1 = (u.u22() - u.u21()) / d;
    const double p1 = (u.u22() - u.u12()) / d;
    const double value = (u.u11() * u.u22() - u.u12() * u.u21()) / d;
    return NESolution{BinaryDist(q1), BinaryDist(p1), value,
                      GameClass::kUniqueMixedNE};
  }
  // A 2x2 zero-sum game without a strictly mixed equilibrium always has a
  // pure saddle point; its value is the pure minmax.
  if (auto saddle = first_pure_saddle(u)) return *saddle;
  throw Error("no pure saddle point in a degenerate 2x2 game");
}

}  // namespace noisycommit
