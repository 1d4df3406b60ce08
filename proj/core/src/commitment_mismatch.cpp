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

#include "noisycommit/commitment_mismatch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "affine.hpp"

namespace noisycommit {

using detail::PurePolicy;
using detail::pure_policy_payoff;

Distortion::Distortion(double t11, double t12, double t21, double t22)
    : t_{{{t11, t12}, {t21, t22}}} {
  if (auto msg = check_column_stochastic({t11, t12, t21, t22}); !msg.empty()) {
    throw InvalidArgument("distortion: " + msg);
  }
  if (std::abs(det()) <= kProbTol) {
    throw InvalidArgument("distortion: matrix is singular (det t = 0)");
  }
}

BinaryDist distort(const Distortion& t, const BinaryDist& leader) {
  const double q1 = t(0, 0) * leader.p1() + t(0, 1) * leader.p2();
  const double q2 = t(1, 0) * leader.p1() + t(1, 1) * leader.p2();
  // Column sums are one only to kProbTol; renormalize.
  return BinaryDist::of(q1 / (q1 + q2), q2 / (q1 + q2));
}

std::optional<double> inv_indifference(const PayoffMatrix& u, const Channel& w,
                                       const Distortion& t, Action obs) {
  const auto p = indifference_point(u, w, obs);
  if (!p) return std::nullopt;
  return t.inverse(*p);
}

namespace {

struct VertexRange {
  double lo = 0.0;
  double hi = 0.0;
  PurePolicy lo_policy{};
  PurePolicy hi_policy{};
  bool unique = true;
};

// Best-response components to the distorted commitment, for a commitment
// given as a plain real.
std::array<BRComponent, 2> distorted_response(const PayoffMatrix& u,
                                              const Channel& w,
                                              const Distortion& t, double p1) {
  const double seen = t.forward(p1);
  return {detail::classify_s(detail::s_raw(u, w, seen, Action::kA1)),
          detail::classify_s(detail::s_raw(u, w, seen, Action::kA2))};
}

std::vector<Action> options(BRComponent c) {
  switch (c) {
    case BRComponent::kPureA1:
      return {Action::kA1};
    case BRComponent::kPureA2:
      return {Action::kA2};
    case BRComponent::kAnyMixed:
      break;
  }
  return {Action::kA1, Action::kA2};
}

// The payoff is affine in each component of the follower's policy, so the
// extremes over the product of best-response sets sit at pure vertices.
VertexRange vertex_range(const PayoffMatrix& u, const Channel& w,
                         const Distortion& t, double p1) {
  const auto br = distorted_response(u, w, t, p1);
  VertexRange r;
  r.lo = std::numeric_limits<double>::infinity();
  r.hi = -std::numeric_limits<double>::infinity();
  r.unique = br[0] != BRComponent::kAnyMixed && br[1] != BRComponent::kAnyMixed;
  for (Action a : options(br[0])) {
    for (Action b : options(br[1])) {
      const PurePolicy policy{a, b};
      const double value = pure_policy_payoff(u, w, policy, p1);
      if (value < r.lo) {
        r.lo = value;
        r.lo_policy = policy;
      }
      if (value > r.hi) {
        r.hi = value;
        r.hi_policy = policy;
      }
    }
  }
  return r;
}

// Policy played on an open region. s is affine in P(a1) and vanishes only at
// the breakpoints, so any interior point represents the whole region.
PurePolicy region_policy(const PayoffMatrix& u, const Channel& w,
                         const Distortion& t, double representative) {
  return vertex_range(u, w, t, representative).hi_policy;
}

struct Region {
  double left = 0.0;
  double right = 0.0;
  PurePolicy policy{};
  double value_left = 0.0;   // branch limit at `left`
  double value_right = 0.0;  // branch limit at `right`

  double slope() const { return (value_right - value_left) / (right - left); }
};

// Breakpoints {0, 1} ∪ {P̃^(i)} ∩ [0, 1] and the affine regions between them.
struct Landscape {
  std::vector<double> breakpoints;
  std::vector<VertexRange> at_breakpoint;
  std::vector<Region> regions;  // regions[k] spans breakpoints k, k+1
};

Landscape build_landscape(const PayoffMatrix& u, const Channel& w,
                          const Distortion& t) {
  Landscape land;
  land.breakpoints = {0.0, 1.0};
  for (Action obs : kActions) {
    if (auto p = inv_indifference(u, w, t, obs); p && *p >= 0.0 && *p <= 1.0) {
      land.breakpoints.push_back(*p);
    }
  }
  std::sort(land.breakpoints.begin(), land.breakpoints.end());
  land.breakpoints.erase(
      std::unique(land.breakpoints.begin(), land.breakpoints.end()),
      land.breakpoints.end());

  for (double p : land.breakpoints) {
    land.at_breakpoint.push_back(vertex_range(u, w, t, p));
  }
  for (std::size_t k = 0; k + 1 < land.breakpoints.size(); ++k) {
    Region region;
    region.left = land.breakpoints[k];
    region.right = land.breakpoints[k + 1];
    region.policy =
        region_policy(u, w, t, 0.5 * (region.left + region.right));
    region.value_left = pure_policy_payoff(u, w, region.policy, region.left);
    region.value_right = pure_policy_payoff(u, w, region.policy, region.right);
    land.regions.push_back(region);
  }
  return land;
}

struct Infimum {
  double value = std::numeric_limits<double>::infinity();
  std::size_t breakpoint = 0;
};

// Infimum of the lower envelope. Region limits are included: each is also an
// element of v_tilde at the adjacent breakpoint, so the infimum is always
// located at a breakpoint.
Infimum lower_infimum(const Landscape& land) {
  Infimum inf;
  for (std::size_t k = 0; k < land.breakpoints.size(); ++k) {
    if (land.at_breakpoint[k].lo < inf.value) {
      inf.value = land.at_breakpoint[k].lo;
      inf.breakpoint = k;
    }
  }
  for (std::size_t k = 0; k < land.regions.size(); ++k) {
    const Region& r = land.regions[k];
    if (r.value_left < inf.value) {
      inf.value = r.value_left;
      inf.breakpoint = k;
    }
    if (r.value_right < inf.value) {
      inf.value = r.value_right;
      inf.breakpoint = k + 1;
    }
  }
  return inf;
}

bool is_flat(const Region& r) {
  return std::abs(r.value_right - r.value_left) <= kEps;
}

CommitmentOutcome outcome_at(const PayoffMatrix& u, const Channel& w,
                             const Distortion& t, double p1) {
  const VertexRange range = vertex_range(u, w, t, p1);
  return {BinaryDist(p1), detail::to_policy(range.hi_policy), range.hi};
}

}  // namespace

PayoffSet v_tilde(const PayoffMatrix& u, const Channel& w, const Distortion& t,
                  const BinaryDist& leader) {
  const VertexRange r = vertex_range(u, w, t, leader.p1());
  return {r.lo, r.hi};
}

double omega(const PayoffMatrix& u, const Channel& w, const Distortion& t,
             const BinaryDist& leader) {
  const auto b1 = inv_indifference(u, w, t, Action::kA1);
  const auto b2 = inv_indifference(u, w, t, Action::kA2);
  if (!b1 || !b2) {
    throw DegenerateConfiguration(
        "omega is undefined without both indifference points");
  }
  const double left = std::min(*b1, *b2);
  const double right = std::max(*b1, *b2);
  const double p1 = leader.p1();

  double representative = 0.0;
  if (p1 < left) {
    representative = left - 1.0;
  } else if (p1 > right) {
    representative = right + 1.0;
  } else if (right > left) {
    representative = 0.5 * (left + right);
  } else {
    // The middle branch is empty; both breakpoints coincide at p1.
    return vertex_range(u, w, t, p1).lo;
  }
  return pure_policy_payoff(u, w, region_policy(u, w, t, representative), p1);
}

std::optional<MismatchBenefit> mismatch_benefit(const PayoffMatrix& u,
                                                const Channel& w,
                                                const Distortion& t) {
  const double reference = leader_equilibrium(u, w).value;
  const Landscape land = build_landscape(u, w, t);

  std::vector<double> candidates = land.breakpoints;
  for (const Region& r : land.regions) {
    candidates.push_back(0.5 * (r.left + r.right));
  }
  std::optional<MismatchBenefit> best;
  for (double p : candidates) {
    const double lo = vertex_range(u, w, t, p).lo;
    if (lo < reference - kEps && (!best || lo < best->value)) {
      best = MismatchBenefit{BinaryDist(p), lo};
    }
  }
  return best;
}

MismatchReport equilibrium_analysis(const PayoffMatrix& u, const Channel& w,
                                    const Distortion& t) {
  const Landscape land = build_landscape(u, w, t);
  const Infimum inf = lower_infimum(land);

  MismatchReport report;
  report.omega_infimum = inf.value;
  report.omega_argmin = BinaryDist(land.breakpoints[inf.breakpoint]);
  const VertexRange& at = land.at_breakpoint[inf.breakpoint];
  report.vtilde_at_argmin = {at.lo, at.hi};

  // Inside a sloped region every value exceeds the region's limit at one
  // end, which already belongs to v_tilde there; such points can never
  // attain the infimum. Only breakpoints and flat regions are candidates.
  double guaranteed = std::numeric_limits<double>::infinity();
  for (const VertexRange& r : land.at_breakpoint) {
    guaranteed = std::min(guaranteed, r.hi);
  }
  for (const Region& r : land.regions) {
    if (is_flat(r)) {
      guaranteed = std::min(guaranteed, std::max(r.value_left, r.value_right));
    }
  }
  report.guaranteed_min = guaranteed;
  report.equilibrium_exists = guaranteed <= inf.value + kEps;
  report.undistorted_value = leader_equilibrium(u, w).value;
  report.benefit_over_undistorted =
      std::max(0.0, report.undistorted_value - inf.value);
  return report;
}

CommitmentOutcome strong_commitment(const PayoffMatrix& u, const Channel& w,
                                    const Distortion& t) {
  const Landscape land = build_landscape(u, w, t);
  const Infimum inf = lower_infimum(land);
  const double p = land.breakpoints[inf.breakpoint];
  const VertexRange& range = land.at_breakpoint[inf.breakpoint];
  return {BinaryDist(p), detail::to_policy(range.lo_policy), range.lo};
}

CommitmentOutcome epsilon_commitment(const PayoffMatrix& u, const Channel& w,
                                     const Distortion& t, double eps) {
  if (!(eps > 0.0)) {
    throw InvalidArgument("epsilon must be positive");
  }
  const Landscape land = build_landscape(u, w, t);
  const Infimum inf = lower_infimum(land);
  const std::size_t k = inf.breakpoint;
  const double target = inf.value + eps;

  if (land.at_breakpoint[k].unique && land.at_breakpoint[k].hi <= target) {
    return outcome_at(u, w, t, land.breakpoints[k]);
  }

  // Step off the infimizing breakpoint into an adjacent open region, far
  // enough for a strict response but close enough to stay within eps.
  std::optional<CommitmentOutcome> best;
  auto try_region = [&](const Region& r, bool step_right) {
    const double limit = step_right ? r.value_left : r.value_right;
    const double slack = target - limit;
    if (slack <= 0.0) return;
    const double half_width = 0.5 * (r.right - r.left);
    const double slope = std::abs(r.slope());
    const double delta =
        slope > 0.0 ? std::min(half_width, 0.5 * slack / slope) : half_width;
    const double anchor = land.breakpoints[k];
    const double p = step_right ? anchor + delta : anchor - delta;
    const VertexRange range = vertex_range(u, w, t, p);
    if (!range.unique || range.hi > target) return;
    if (!best || range.hi < best->value) best = outcome_at(u, w, t, p);
  };
  if (k > 0) try_region(land.regions[k - 1], /*step_right=*/false);
  if (k < land.regions.size()) try_region(land.regions[k], /*step_right=*/true);
  if (best) return *best;

  // No strict response anywhere near the infimizer: fall back to a
  // commitment whose payoff does not depend on how ties are broken.
  std::vector<double> fallback;
  for (const Region& r : land.regions) {
    fallback.push_back(0.5 * (r.left + r.right));
  }
  fallback.insert(fallback.end(), land.breakpoints.begin(),
                  land.breakpoints.end());
  for (double p : fallback) {
    const VertexRange range = vertex_range(u, w, t, p);
    if (range.hi - range.lo <= kEps && range.hi <= target) {
      return outcome_at(u, w, t, p);
    }
  }
  std::ostringstream msg;
  msg << "no commitment with a predictable response within " << eps
      << " of the infimum " << inf.value;
  throw InfeasibleEpsilon(msg.str());
}

}  // namespace noisycommit
