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

// Acceptance suite: one pass/fail line per criterion. Every target is checked
// against an oracle written here, and all tolerances are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "instances.hpp"
#include "noisycommit/noisycommit.hpp"
#include "oracles.hpp"

namespace nc = noisycommit;
using nc::Action;
using nc::BinaryDist;

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kGridTol = 1e-7;
constexpr double kPropertyTol = 1e-9;
constexpr double kNashBudgetMs = 1.0;
constexpr double kEquilibriumBudgetMs = 10.0;
constexpr double kSimulationBudgetMs = 5000.0;
constexpr double kOmegaGap = 0.25;
constexpr double kEpsilon = 1e-3;
constexpr double kSimulationTol = 0.05;
constexpr std::uint64_t kSimulationRounds = 1000000;
constexpr std::uint64_t kSimulationSeed = 42;

const nc::PayoffMatrix kReference(-8, 6, 2, -2);
const nc::Channel kReferenceChannel(0.8, 0.2, 0.2, 0.8);
const nc::Distortion kReferenceDistortion(0.9, 0.1, 0.1, 0.9);

// Collects failures for one criterion and prints a single summary line.
class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void require(bool ok, const std::string& what) {
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }
  void note(const std::string& detail) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += detail;
  }
  bool report() const {
    std::printf("[%s] criterion %d: %s", ok_ ? "PASS" : "FAIL", id_,
                title_.c_str());
    if (!notes_.empty()) std::printf(" (%s)", notes_.c_str());
    if (!ok_) std::printf(" -- first failure: %s", first_failure_.c_str());
    std::printf("\n");
    return ok_;
  }

 private:
  int id_;
  std::string title_;
  bool ok_ = true;
  std::string first_failure_;
  std::string notes_;
};

std::string fmt(const char* format, double x) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

template <typename F>
double best_of_ms(int repeats, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

bool criterion_1() {
  Criterion c(1, "reference-instance Nash equilibrium");
  nc::NESolution ne;
  const double ms = best_of_ms(5, [&] { ne = nc::nash(kReference); });
  // Closed forms of the unique mixed equilibrium.
  const double d = kReference.u11() - kReference.u12() - kReference.u21() + kReference.u22();
  const double q = (kReference.u22() - kReference.u21()) / d;
  const double p = (kReference.u22() - kReference.u12()) / d;
  const double v =
      (kReference.u11() * kReference.u22() - kReference.u12() * kReference.u21()) / d;
  c.require(std::abs(q - 2.0 / 9) <= kExactTol, "closed-form follower");
  c.require(std::abs(p - 4.0 / 9) <= kExactTol, "closed-form leader");
  c.require(std::abs(v + 2.0 / 9) <= kExactTol, "closed-form value");
  c.require(std::abs(ne.follower_strategy.p1() - q) <= kExactTol, "follower");
  c.require(std::abs(ne.leader_strategy.p1() - p) <= kExactTol, "leader");
  c.require(std::abs(ne.value - v) <= kExactTol, "value");
  // Best-response oracle: every pure deviation is payoff-neutral.
  for (Action a : nc::kActions) {
    const double follower_dev =
        nc::expected_payoff(kReference, BinaryDist::pure(a), ne.leader_strategy);
    const double leader_dev =
        nc::expected_payoff(kReference, ne.follower_strategy, BinaryDist::pure(a));
    c.require(std::abs(follower_dev - v) <= kExactTol, "follower deviation");
    c.require(std::abs(leader_dev - v) <= kExactTol, "leader deviation");
  }
  c.require(ms < kNashBudgetMs, "runtime " + fmt("%.4f ms", ms));
  c.note("value " + fmt("%.15g", ne.value) + ", " + fmt("%.4f ms", ms));
  return c.report();
}

bool criterion_2() {
  Criterion c(2, "indifference points, sandwich and ordering");
  const double p1 = *nc::indifference_point(kReference, kReferenceChannel, Action::kA1);
  const double p2 = *nc::indifference_point(kReference, kReferenceChannel, Action::kA2);
  c.require(std::abs(p1 - 1.0 / 6) <= kExactTol, "P^(1)");
  c.require(std::abs(p2 - 16.0 / 21) <= kExactTol, "P^(2)");
  // Oracle: the observation's payoff difference vanishes there.
  const auto s = [](double p, double wa, double wb) {
    return (kReference.u11() - kReference.u21()) * p * wa +
           (kReference.u12() - kReference.u22()) * (1.0 - p) * wb;
  };
  c.require(std::abs(s(p1, 0.8, 0.2)) <= kExactTol, "s at P^(1)");
  c.require(std::abs(s(p2, 0.2, 0.8)) <= kExactTol, "s at P^(2)");

  nc::testing::Rng rng(9002);
  int violations = 0;
  for (int k = 0; k < 10000; ++k) {
    const nc::PayoffMatrix u = rng.mixed_payoff();
    const nc::Channel w = rng.channel(0.0);
    const double a = *nc::indifference_point(u, w, Action::kA1);
    const double b = *nc::indifference_point(u, w, Action::kA2);
    const double star = nc::nash(u).leader_strategy.p1();
    bool ok = std::min(a, b) <= star + kExactTol &&
              star <= std::max(a, b) + kExactTol;
    if (w.det() > 0) ok = ok && a <= b + kExactTol;
    if (w.det() < 0) ok = ok && b <= a + kExactTol;
    if (!ok) ++violations;
  }
  c.require(violations == 0, std::to_string(violations) + " random violations");
  c.note("10000 random mixed games");
  return c.report();
}

bool criterion_3() {
  Criterion c(3, "reference-instance leader equilibrium");
  nc::Equilibrium eq;
  double grid_min = 0.0;
  double refined_min = 0.0;
  const double ms = best_of_ms(5, [&] {
    eq = nc::leader_equilibrium(kReference, kReferenceChannel);
    grid_min = 1e300;
    for (int g = 0; g <= 10000; ++g) {
      grid_min = std::min(
          grid_min, nc::v_hat(kReference, kReferenceChannel, BinaryDist(g / 10000.0)));
    }
    refined_min = nc::testing::convex_minimum(
        [](double x) { return nc::v_hat(kReference, kReferenceChannel, BinaryDist(x)); },
        10001);
  });
  c.require(std::abs(eq.value - 22.0 / 21) <= kExactTol, "value");
  c.require(std::abs(eq.leader_commitment.p1() - 16.0 / 21) <= kExactTol,
            "commitment a1");
  c.require(std::abs(eq.leader_commitment.p2() - 5.0 / 21) <= kExactTol,
            "commitment a2");
  c.require(eq.value <= grid_min + kExactTol, "value above grid minimum");
  c.require(std::abs(eq.value - refined_min) <= kGridTol,
            "refined grid minimum " + fmt("%.12g", refined_min));
  c.require(ms < kEquilibriumBudgetMs, "runtime " + fmt("%.3f ms", ms));
  c.note("raw grid gap " + fmt("%.2e", grid_min - eq.value) +
         ", refined gap " + fmt("%.2e", std::abs(refined_min - eq.value)) +
         ", " + fmt("%.3f ms", ms));
  return c.report();
}

double upper_bound(const nc::PayoffMatrix& u, const BinaryDist& p) {
  return p.p1() * std::max(u.u11(), u.u21()) +
         p.p2() * std::max(u.u12(), u.u22());
}

bool criterion_4() {
  Criterion c(4, "payoff bound chain");
  nc::testing::Rng rng(9004);
  int chain = 0, flat = 0, sharp = 0;
  for (int k = 0; k < 10000; ++k) {
    const nc::PayoffMatrix u = rng.payoff();
    const nc::Channel w = rng.channel(0.0);
    const BinaryDist p = rng.dist();
    const double ne = nc::nash(u).value;
    const double uh = nc::u_hat(u, p);
    const double vh = nc::v_hat(u, w, p);
    const double ub = upper_bound(u, p);
    if (!(ne <= uh + kPropertyTol && uh <= vh + kPropertyTol &&
          vh <= ub + kPropertyTol)) {
      ++chain;
    }
    if (std::abs(nc::u_hat(u, p) -
                 nc::v_hat(u, rng.uninformative_channel(), p)) > kPropertyTol) {
      ++flat;
    }
    if (std::abs(nc::v_hat(u, rng.revealing_channel(), p) - ub) > kPropertyTol) {
      ++sharp;
    }
  }
  c.require(chain == 0, std::to_string(chain) + " chain violations");
  c.require(flat == 0, std::to_string(flat) + " det w = 0 mismatches");
  c.require(sharp == 0, std::to_string(sharp) + " |det w| = 1 mismatches");
  c.note("10000 random instances per check");
  return c.report();
}

bool criterion_5() {
  Criterion c(5, "relevance of observations");
  nc::testing::Rng rng(9005);
  int degenerate = 0, flat = 0, sharp = 0;
  for (int k = 0; k < 1000; ++k) {
    const nc::PayoffMatrix d = rng.degenerate_payoff();
    if (std::abs(nc::leader_equilibrium(d, rng.channel(0.0)).value -
                 nc::nash(d).value) > kPropertyTol) {
      ++degenerate;
    }
    const nc::PayoffMatrix m = rng.mixed_payoff();
    if (std::abs(nc::leader_equilibrium(m, rng.uninformative_channel()).value -
                 nc::nash(m).value) > kPropertyTol) {
      ++flat;
    }
    const nc::PayoffMatrix u = rng.payoff();
    // Oracle: the pure minmax written out directly.
    const double minmax = std::min(std::max(u.u11(), u.u21()),
                                   std::max(u.u12(), u.u22()));
    if (std::abs(nc::leader_equilibrium(u, rng.revealing_channel()).value -
                 minmax) > kPropertyTol) {
      ++sharp;
    }
  }
  c.require(degenerate == 0, std::to_string(degenerate) + " degenerate");
  c.require(flat == 0, std::to_string(flat) + " uninformative");
  c.require(sharp == 0, std::to_string(sharp) + " fully revealing");
  c.note("1000 instances per family");
  return c.report();
}

bool criterion_6() {
  Criterion c(6, "posterior consistency at equilibrium");
  nc::testing::Rng rng(9006);
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const nc::PayoffMatrix u = rng.mixed_payoff();
    const nc::Channel w = rng.channel();
    const nc::Equilibrium eq = nc::leader_equilibrium(u, w);
    if (!eq.indifferent_observation) {
      ++failures;
      continue;
    }
    // Oracle: Bayes' rule by hand.
    const Action i = *eq.indifferent_observation;
    const double j1 = w(i, Action::kA1) * eq.leader_commitment.p1();
    const double j2 = w(i, Action::kA2) * eq.leader_commitment.p2();
    const double err =
        std::abs(j1 / (j1 + j2) - nc::nash(u).leader_strategy.p1());
    worst = std::max(worst, err);
    if (err > kPropertyTol) ++failures;
  }
  c.require(failures == 0, std::to_string(failures) + " instances");
  c.note("1000 games, worst " + fmt("%.1e", worst));
  return c.report();
}

bool criterion_7() {
  Criterion c(7, "commitment mismatch on the reference instance");
  const nc::MismatchReport r =
      nc::equilibrium_analysis(kReference, kReferenceChannel, kReferenceDistortion);
  c.require(!r.equilibrium_exists, "equilibrium reported as existing");
  c.require(r.omega_infimum < 22.0 / 21 - kOmegaGap, "infimum not below target");

  // Scan oracle over the lower envelope, then the middle-branch value at the
  // distorted breakpoint written in closed form.
  double scan = 1e300;
  for (int g = 0; g <= 10000; ++g) {
    scan = std::min(scan, nc::v_tilde(kReference, kReferenceChannel, kReferenceDistortion,
                                      BinaryDist(g / 10000.0))
                              .lo);
  }
  const nc::testing::BranchFormulas f(kReference, kReferenceChannel, kReferenceDistortion);
  const double closed = f.contrary(f.distorted_breakpoint(2));
  c.require(scan >= r.omega_infimum - kPropertyTol, "scan below infimum");
  c.require(scan - r.omega_infimum <= kEpsilon, "scan far above infimum");
  c.require(std::abs(closed - r.omega_infimum) <= kExactTol,
            "closed-form infimum " + fmt("%.12g", closed));

  const nc::CommitmentOutcome e = nc::epsilon_commitment(
      kReference, kReferenceChannel, kReferenceDistortion, kEpsilon);
  const nc::BestResponse br = nc::best_response(
      kReference, kReferenceChannel, nc::distort(kReferenceDistortion, e.commitment));
  c.require(br[0] != nc::BRComponent::kAnyMixed &&
                br[1] != nc::BRComponent::kAnyMixed,
            "eps-commitment response not unique");
  c.require(std::abs(e.value - r.omega_infimum) <= kEpsilon,
            "eps-commitment value");

  nc::testing::Rng rng(9007);
  int strict = 0;
  for (int k = 0; k < 100;) {
    const nc::PayoffMatrix u = rng.mixed_payoff();
    const nc::Channel w = rng.channel();
    const nc::Distortion t = rng.distortion();
    const double v1 =
        nc::v_hat(u, w, BinaryDist(*nc::indifference_point(u, w, Action::kA1)));
    const double v2 =
        nc::v_hat(u, w, BinaryDist(*nc::indifference_point(u, w, Action::kA2)));
    if (std::abs(v1 - v2) < 1e-3) continue;
    ++k;
    const auto benefit = nc::mismatch_benefit(u, w, t);
    // Oracle for strictness: re-evaluate the lower envelope at the returned
    // commitment and compare with a refined grid minimum of v_hat.
    const double undistorted = nc::testing::convex_minimum(
        [&](double x) { return nc::v_hat(u, w, BinaryDist(x)); }, 2001);
    if (benefit && nc::v_tilde(u, w, t, benefit->commitment).lo <
                       undistorted - kPropertyTol) {
      ++strict;
    }
  }
  c.require(strict == 100, std::to_string(strict) + "/100 strict benefits");
  c.note("infimum " + fmt("%.10f", r.omega_infimum) + ", scan " +
         fmt("%.10f", scan) + ", eps value " + fmt("%.10f", e.value) +
         ", strict benefit " + std::to_string(strict) + "/100");
  return c.report();
}

bool criterion_8() {
  Criterion c(8, "distorted payoff branch formulas");
  nc::testing::Rng rng(9008);
  int checked = 0;
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const nc::PayoffMatrix u = rng.mixed_payoff_with_cross_sign(true);
    const nc::Channel w = rng.channel_with_det_sign(true);
    const nc::Distortion t = rng.distortion_with_det_sign(true);
    const nc::testing::BranchFormulas f(u, w, t);
    const nc::testing::Piecewise shape{
        f.distorted_breakpoint(1), f.distorted_breakpoint(2),
        [&](double p) { return f.row2(p); },
        [&](double p) { return f.truthful(p); },
        [&](double p) { return f.row1(p); }};
    const auto r = nc::testing::check_piecewise(u, w, t, shape, rng, kPropertyTol);
    checked += r.checked;
    failures += r.failures;
    worst = std::max(worst, r.worst);
  }
  c.require(failures == 0, std::to_string(failures) + " five-branch mismatches");
  int case_checked = 0;
  for (const bool det_w : {true, false}) {
    for (const bool det_t : {true, false}) {
      for (int k = 0; k < 250; ++k) {
        const nc::PayoffMatrix u = rng.mixed_payoff_with_cross_sign(true);
        const nc::Channel w = rng.channel_with_det_sign(det_w);
        const nc::Distortion t = rng.distortion_with_det_sign(det_t);
        const nc::testing::BranchFormulas f(u, w, t);
        const auto r = nc::testing::check_piecewise(
            u, w, t, nc::testing::positive_cross_sum_shape(f), rng,
            kPropertyTol);
        case_checked += r.checked;
        worst = std::max(worst, r.worst);
        c.require(r.failures == 0,
                  std::string("sign pattern det w ") + (det_w ? "+" : "-") +
                      ", det t " + (det_t ? "+" : "-"));
      }
    }
  }
  c.note(std::to_string(checked) + " five-branch points, " +
         std::to_string(case_checked) + " four-case points, worst " +
         fmt("%.1e", worst));
  return c.report();
}

bool criterion_9() {
  Criterion c(9, "repeated-game simulation of the reference equilibrium");
  const nc::Equilibrium eq = nc::leader_equilibrium(kReference, kReferenceChannel);
  nc::SimConfig cfg;
  cfg.rounds = kSimulationRounds;
  cfg.seed = kSimulationSeed;
  cfg.leader_commitment = eq.leader_commitment;
  cfg.follower_policy = eq.follower_policy;
  cfg.channel = kReferenceChannel;
  nc::SimResult first;
  const double ms = best_of_ms(1, [&] { first = nc::simulate(kReference, cfg); });
  const nc::SimResult second = nc::simulate(kReference, cfg);
  const double dev = std::abs(first.mean_payoff - 22.0 / 21);
  c.require(dev <= kSimulationTol, "deviation " + fmt("%.4g", dev));
  c.require(std::memcmp(&first.mean_payoff, &second.mean_payoff,
                        sizeof(double)) == 0 &&
                std::memcmp(&first.std_error, &second.std_error,
                            sizeof(double)) == 0 &&
                first.action_counts == second.action_counts,
            "rerun differs");
  c.require(ms < kSimulationBudgetMs, "runtime " + fmt("%.0f ms", ms));
  c.note("mean " + fmt("%.6f", first.mean_payoff) + ", |dev| " +
         fmt("%.2e", dev) + ", 5 sigma " + fmt("%.2e", 5 * first.std_error) +
         ", " + fmt("%.0f ms", ms));
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9};
  int failed = 0;
  for (const auto& run : criteria) {
    if (!run()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
