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

// Commitment mismatch: the follower believes the leader committed to t·P
// while the leader actually samples from P. The leader's payoff becomes a
// set-valued correspondence whenever the follower is indifferent.

#ifndef NOISYCOMMIT_COMMITMENT_MISMATCH_HPP_
#define NOISYCOMMIT_COMMITMENT_MISMATCH_HPP_

#include <array>
#include <optional>

#include "noisycommit/noisy_observation.hpp"
#include "noisycommit/types.hpp"

namespace noisycommit {

// Nonsingular column-stochastic 2x2 matrix t mapping the announced
// commitment to the one the follower perceives.
class Distortion {
 public:
  Distortion(double t11, double t12, double t21, double t22);

  static Distortion identity() { return Distortion(1.0, 0.0, 0.0, 1.0); }

  double operator()(std::size_t row, std::size_t col) const {
    return t_[row][col];
  }
  // det t = t11 - t12 for a column-stochastic matrix.
  double det() const { return t_[0][0] * t_[1][1] - t_[0][1] * t_[1][0]; }

  // First coordinate of t (p1, 1 - p1) and of t^-1 (p1, 1 - p1). Defined for
  // every real p1.
  double forward(double p1) const {
    return t_[0][0] * p1 + t_[0][1] * (1.0 - p1);
  }
  double inverse(double p1) const {
    return (t_[1][1] * p1 - t_[0][1] * (1.0 - p1)) / det();
  }

 private:
  std::array<std::array<double, 2>, 2> t_;
};

// Closed interval [lo, hi]; lo == hi is a single payoff.
struct PayoffSet {
  double lo = 0.0;
  double hi = 0.0;

  bool is_point(double tol = kEps) const { return hi - lo <= tol; }
};

struct MismatchReport {
  // Infimum over commitments of the lower envelope of v_tilde.
  double omega_infimum = 0.0;
  BinaryDist omega_argmin;
  PayoffSet vtilde_at_argmin;
  // Smallest upper-envelope value attained at some commitment: the payoff
  // the leader can lock in regardless of how the follower breaks ties.
  double guaranteed_min = 0.0;
  bool equilibrium_exists = false;
  // v_hat(P†) - omega_infimum, floored at zero.
  double benefit_over_undistorted = 0.0;
  // Equilibrium value of the undistorted game, for reference.
  double undistorted_value = 0.0;
};

struct MismatchBenefit {
  BinaryDist commitment;
  double value = 0.0;
};

// A commitment together with the follower policy it induces.
struct CommitmentOutcome {
  BinaryDist commitment;
  FollowerPolicy policy;
  double value = 0.0;
};

class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

class InfeasibleEpsilon : public Error {
 public:
  using Error::Error;
};

BinaryDist distort(const Distortion& t, const BinaryDist& leader);

// P̃^(i): the true commitment whose distortion lands on the indifference
// point P^(i). Absent with P^(i); may lie outside [0, 1].
std::optional<double> inv_indifference(const PayoffMatrix& u, const Channel& w,
                                       const Distortion& t, Action obs);

// Payoffs reachable when the follower best-responds to the distorted
// commitment while the leader samples from `leader`.
PayoffSet v_tilde(const PayoffMatrix& u, const Channel& w, const Distortion& t,
                  const BinaryDist& leader);

// Single-valued selection of v_tilde: the unique-response branch on each side
// of the breakpoints, and the middle branch on the closed interval between
// them. Throws DegenerateConfiguration when either P̃^(i) is absent.
double omega(const PayoffMatrix& u, const Channel& w, const Distortion& t,
             const BinaryDist& leader);

// A commitment whose most favourable payoff beats the undistorted
// equilibrium value by more than kEps, if one exists.
std::optional<MismatchBenefit> mismatch_benefit(const PayoffMatrix& u,
                                                const Channel& w,
                                                const Distortion& t);

MismatchReport equilibrium_analysis(const PayoffMatrix& u, const Channel& w,
                                    const Distortion& t);

// Strong refinement: the follower breaks ties in the leader's favour, so the
// leader attains the infimum of the lower envelope.
CommitmentOutcome strong_commitment(const PayoffMatrix& u, const Channel& w,
                                    const Distortion& t);

// A commitment inducing a unique follower response whose payoff is within
// `eps` of the infimum. Throws InfeasibleEpsilon when no such commitment is
// found next to the infimizer.
CommitmentOutcome epsilon_commitment(const PayoffMatrix& u, const Channel& w,
                                     const Distortion& t, double eps);

}  // namespace noisycommit

#endif  // NOISYCOMMIT_COMMITMENT_MISMATCH_HPP_
