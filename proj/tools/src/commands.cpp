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

#include "noisycommit/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

namespace noisycommit::cli {

using nlohmann::json;

std::string format_roundtrip(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

json dist_json(const BinaryDist& d) { return json::array({d.p1(), d.p2()}); }

json policy_json(const FollowerPolicy& p) {
  return {{"on_obs_a1", dist_json(p.on_obs_a1)},
          {"on_obs_a2", dist_json(p.on_obs_a2)}};
}

json optional_json(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string fmt(const BinaryDist& d) {
  return "(" + fmt(d.p1()) + ", " + fmt(d.p2()) + ")";
}

std::string fmt(const FollowerPolicy& p) {
  return "after a1 play " + fmt(p.on_obs_a1) + ", after a2 play " +
         fmt(p.on_obs_a2);
}

std::string fmt(const std::optional<double>& x) {
  return x ? fmt(*x) : std::string("none");
}

}  // namespace

json ne_report(const GameSpec& spec) {
  const NESolution ne = nash(spec.payoff);
  return {{"command", "ne"},
          {"class", to_string(ne.game_class)},
          {"follower_strategy", dist_json(ne.follower_strategy)},
          {"leader_strategy", dist_json(ne.leader_strategy)},
          {"value", ne.value}};
}

json equilibrium_report(const GameSpec& spec) {
  const PayoffMatrix& u = spec.payoff;
  const Channel& w = spec.channel;
  const Equilibrium eq = leader_equilibrium(u, w);
  const RelevanceReport rel = observation_relevance(u, w);
  json doc = {
      {"command", "equilibrium"},
      {"commitment", dist_json(eq.leader_commitment)},
      {"value", eq.value},
      {"follower_policy", policy_json(eq.follower_policy)},
      {"indifferent_observation",
       eq.indifferent_observation ? json(to_string(*eq.indifferent_observation))
                                  : json(nullptr)},
      {"indifference_points",
       json::array({optional_json(indifference_point(u, w, Action::kA1)),
                    optional_json(indifference_point(u, w, Action::kA2))})},
      {"relevance",
       {{"verdict", to_string(rel.verdict)},
        {"reason", to_string(rel.reason)},
        {"fully_revealing", rel.fully_revealing},
        {"channel_det", rel.channel_det},
        {"ne_value", rel.ne_value},
        {"equilibrium_value", rel.equilibrium_value},
        {"minmax_pure", rel.minmax_pure_value}}}};
  return doc;
}

json mismatch_report(const GameSpec& spec, std::optional<double> eps) {
  const PayoffMatrix& u = spec.payoff;
  const Channel& w = spec.channel;
  const Distortion& t = *spec.distortion;
  const MismatchReport rep = equilibrium_analysis(u, w, t);
  const CommitmentOutcome strong = strong_commitment(u, w, t);
  json doc = {
      {"command", "mismatch"},
      {"omega_infimum", rep.omega_infimum},
      {"omega_argmin", dist_json(rep.omega_argmin)},
      {"vtilde_at_argmin",
       {{"lo", rep.vtilde_at_argmin.lo}, {"hi", rep.vtilde_at_argmin.hi}}},
      {"guaranteed_min", rep.guaranteed_min},
      {"equilibrium_exists", rep.equilibrium_exists},
      {"benefit_over_undistorted", rep.benefit_over_undistorted},
      {"undistorted_value", rep.undistorted_value},
      {"inv_indifference_points",
       json::array({optional_json(inv_indifference(u, w, t, Action::kA1)),
                    optional_json(inv_indifference(u, w, t, Action::kA2))})},
      {"strong",
       {{"commitment", dist_json(strong.commitment)},
        {"follower_policy", policy_json(strong.policy)},
        {"value", strong.value}}}};
  if (eps) {
    const CommitmentOutcome e = epsilon_commitment(u, w, t, *eps);
    doc["epsilon"] = {{"eps", *eps},
                      {"commitment", dist_json(e.commitment)},
                      {"follower_policy", policy_json(e.policy)},
                      {"value", e.value}};
  }
  return doc;
}

json simulation_report(const ValidationReport& report,
                       const BinaryDist& leader) {
  const SimResult& sim = report.sim;
  json counts = json::array();
  for (const auto& by_obs : sim.action_counts) {
    json outer = json::array();
    for (const auto& by_action : by_obs) {
      outer.push_back(json::array({by_action[0], by_action[1]}));
    }
    counts.push_back(outer);
  }
  return {{"command", "simulate"},
          {"mean", sim.mean_payoff},
          {"std_error", sim.std_error},
          {"rounds", sim.rounds},
          {"seed", sim.seed},
          {"counts", counts},
          {"leader_commitment", dist_json(leader)},
          {"follower_policy", policy_json(report.policy)},
          {"theory", report.theory},
          {"deviation", report.deviation},
          {"tolerance", report.tolerance},
          {"pass", report.passed}};
}

std::vector<SweepRow> sweep_rows(const GameSpec& spec, int grid) {
  if (grid < 2) throw InvalidArgument("grid must be at least 2");
  const PayoffMatrix& u = spec.payoff;
  const Channel& w = spec.channel;

  auto row_at = [&](double p, std::string flag) {
    const BinaryDist leader(p);
    SweepRow row;
    row.p_a1 = p;
    row.u_hat = u_hat(u, leader);
    row.v_hat = v_hat(u, w, leader);
    if (spec.distortion) {
      const PayoffSet set = v_tilde(u, w, *spec.distortion, leader);
      row.v_tilde_lo = set.lo;
      row.v_tilde_hi = set.hi;
      try {
        row.omega = omega(u, w, *spec.distortion, leader);
      } catch (const DegenerateConfiguration&) {
      }
    }
    row.breakpoint = std::move(flag);
    return row;
  };

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid) + 4);
  for (int k = 0; k < grid; ++k) {
    const double p = k == grid - 1 ? 1.0 : static_cast<double>(k) / (grid - 1);
    rows.push_back(row_at(p, ""));
  }
  auto add_breakpoint = [&](const std::optional<double>& p, const char* flag) {
    if (p && *p >= 0.0 && *p <= 1.0) rows.push_back(row_at(*p, flag));
  };
  add_breakpoint(indifference_point(u, w, Action::kA1), "P1");
  add_breakpoint(indifference_point(u, w, Action::kA2), "P2");
  if (spec.distortion) {
    add_breakpoint(inv_indifference(u, w, *spec.distortion, Action::kA1), "Pt1");
    add_breakpoint(inv_indifference(u, w, *spec.distortion, Action::kA2), "Pt2");
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto cell = [](const std::optional<double>& x) {
    return x ? format_roundtrip(*x) : std::string();
  };
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_roundtrip(r.p_a1) << ',' << format_roundtrip(r.u_hat) << ','
        << format_roundtrip(r.v_hat) << ',' << cell(r.v_tilde_lo) << ','
        << cell(r.v_tilde_hi) << ',' << cell(r.omega) << ',' << r.breakpoint
        << '\n';
  }
}

namespace {

void print_ne(std::ostream& out, const json& r) {
  out << "class:             " << r["class"].get<std::string>() << '\n'
      << "follower P*(a1):   " << fmt(r["follower_strategy"][0].get<double>())
      << '\n'
      << "leader   P*(a1):   " << fmt(r["leader_strategy"][0].get<double>())
      << '\n'
      << "value:             " << fmt(r["value"].get<double>()) << '\n';
}

void print_equilibrium(std::ostream& out, const GameSpec& spec) {
  const Equilibrium eq = leader_equilibrium(spec.payoff, spec.channel);
  const RelevanceReport rel = observation_relevance(spec.payoff, spec.channel);
  out << "commitment:        " << fmt(eq.leader_commitment) << '\n'
      << "value:             " << fmt(eq.value) << '\n'
      << "follower policy:   " << fmt(eq.follower_policy) << '\n'
      << "indifferent after: "
      << (eq.indifferent_observation ? to_string(*eq.indifferent_observation)
                                     : std::string("none"))
      << '\n'
      << "P^(1), P^(2):      "
      << fmt(indifference_point(spec.payoff, spec.channel, Action::kA1))
      << ", "
      << fmt(indifference_point(spec.payoff, spec.channel, Action::kA2))
      << '\n'
      << "observations:      " << to_string(rel.verdict) << " ("
      << to_string(rel.reason) << (rel.fully_revealing ? ", FullyRevealing" : "")
      << ")\n"
      << "NE value:          " << fmt(rel.ne_value) << '\n'
      << "pure minmax:       " << fmt(rel.minmax_pure_value) << '\n';
}

void print_mismatch(std::ostream& out, const json& r) {
  out << "omega infimum:     " << fmt(r["omega_infimum"].get<double>())
      << " at P(a1) = " << fmt(r["omega_argmin"][0].get<double>()) << '\n'
      << "v_tilde there:     [" << fmt(r["vtilde_at_argmin"]["lo"].get<double>())
      << ", " << fmt(r["vtilde_at_argmin"]["hi"].get<double>()) << "]\n"
      << "guaranteed min:    " << fmt(r["guaranteed_min"].get<double>()) << '\n'
      << "equilibrium:       "
      << (r["equilibrium_exists"].get<bool>() ? "exists" : "does not exist")
      << '\n'
      << "undistorted value: " << fmt(r["undistorted_value"].get<double>())
      << '\n'
      << "benefit:           "
      << fmt(r["benefit_over_undistorted"].get<double>()) << '\n';
  if (r.contains("epsilon")) {
    const json& e = r["epsilon"];
    out << "eps-commitment:    P(a1) = " << fmt(e["commitment"][0].get<double>())
        << ", value " << fmt(e["value"].get<double>()) << " (eps "
        << fmt(e["eps"].get<double>()) << ")\n"
        << "unique response:   after a1 play a"
        << (e["follower_policy"]["on_obs_a1"][0].get<double>() == 1.0 ? 1 : 2)
        << ", after a2 play a"
        << (e["follower_policy"]["on_obs_a2"][0].get<double>() == 1.0 ? 1 : 2)
        << '\n';
  }
}

void print_simulation(std::ostream& out, const json& r) {
  out << "rounds:            " << r["rounds"].get<std::uint64_t>() << '\n'
      << "seed:              " << r["seed"].get<std::uint64_t>() << '\n'
      << "mean payoff:       " << fmt(r["mean"].get<double>()) << '\n'
      << "std error:         " << fmt(r["std_error"].get<double>()) << '\n'
      << "theory:            " << fmt(r["theory"].get<double>()) << '\n'
      << "|mean - theory|:   " << fmt(r["deviation"].get<double>())
      << " (tolerance " << fmt(r["tolerance"].get<double>()) << ")\n"
      << "validation:        " << (r["pass"].get<bool>() ? "pass" : "FAIL")
      << '\n';
}

std::optional<FollowerPolicy> parse_policy(const std::string& text) {
  if (text == "auto") return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw InvalidArgument("--policy: expected 'auto' or 'Q1,Q2'");
  }
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      throw InvalidArgument("--policy: '" + s + "' is not a number");
    }
    return x;
  };
  return FollowerPolicy{BinaryDist(number(text.substr(0, comma))),
                        BinaryDist(number(text.substr(comma + 1)))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero-sum games with commitment, noisy observations and "
               "commitment mismatch"};
  app.name("noisycommit");
  app.require_subcommand(1);

  std::string spec_path;
  bool as_json = false;
  app.add_option("--spec", spec_path, "Game spec JSON file")->required();
  app.add_flag("--json", as_json, "Emit a JSON report");

  auto* ne_cmd = app.add_subcommand("ne", "Nash equilibrium without commitment");
  auto* eq_cmd = app.add_subcommand(
      "equilibrium", "Leader's optimal commitment under noisy observations");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate payoffs over P(a1) as CSV");
  int grid = 1001;
  std::string out_path;
  sweep_cmd->add_option("--grid", grid, "Number of grid points (>= 2)");
  sweep_cmd->add_option("--out", out_path, "CSV output file")->required();

  auto* sim_cmd =
      app.add_subcommand("simulate", "Play the repeated game and compare");
  std::uint64_t rounds = 1000000;
  std::uint64_t seed = 42;
  double leader_p = 0.0;
  std::string policy_text = "auto";
  sim_cmd->add_option("--rounds", rounds, "Number of rounds (>= 1)");
  sim_cmd->add_option("--seed", seed, "PRNG seed");
  sim_cmd->add_option("--leader-p", leader_p, "Commitment P(a1)")->required();
  sim_cmd->add_option("--policy", policy_text,
                      "'auto' (best response) or 'Q1,Q2' = P(a1) after each "
                      "observation");

  auto* mm_cmd = app.add_subcommand(
      "mismatch", "Analyse the game with a distorted commitment");
  std::optional<double> eps;
  mm_cmd->add_option("--eps", eps, "Also compute an eps-commitment");

  for (auto* sub : {ne_cmd, eq_cmd, sweep_cmd, sim_cmd, mm_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    const GameSpec spec = load_game_spec(spec_path);

    if (ne_cmd->parsed()) {
      const json r = ne_report(spec);
      if (as_json) out << r.dump(2) << '\n';
      else print_ne(out, r);
    } else if (eq_cmd->parsed()) {
      if (as_json) out << equilibrium_report(spec).dump(2) << '\n';
      else print_equilibrium(out, spec);
    } else if (sweep_cmd->parsed()) {
      if (grid < 2) {
        err << "error: --grid must be at least 2\n";
        return kExitInvalidInput;
      }
      const auto rows = sweep_rows(spec, grid);
      std::ofstream file(out_path);
      if (!file) {
        err << "error: cannot write " << out_path << '\n';
        return kExitIoFailure;
      }
      write_sweep_csv(file, rows);
      file.close();
      if (!file) {
        err << "error: failed writing " << out_path << '\n';
        return kExitIoFailure;
      }
      const auto flagged = std::count_if(
          rows.begin(), rows.end(),
          [](const SweepRow& r) { return !r.breakpoint.empty(); });
      if (as_json) {
        out << json{{"command", "sweep"},
                    {"out", out_path},
                    {"rows", rows.size()},
                    {"breakpoint_rows", flagged}}
                   .dump(2)
            << '\n';
      } else {
        out << "wrote " << rows.size() << " rows (" << flagged
            << " breakpoints) to " << out_path << '\n';
      }
    } else if (sim_cmd->parsed()) {
      if (rounds < 1) {
        err << "error: --rounds must be at least 1\n";
        return kExitInvalidInput;
      }
      const BinaryDist leader(leader_p);
      const auto policy = parse_policy(policy_text);
      ValidationReport report;
      try {
        report = validate_against_theory(spec.payoff, spec.channel,
                                         spec.distortion, leader, policy,
                                         rounds, seed);
      } catch (const TheoryIntervalAmbiguous& e) {
        err << "error: " << e.what() << '\n';
        return kExitAmbiguousTheory;
      }
      const json r = simulation_report(report, leader);
      if (as_json) out << r.dump(2) << '\n';
      else print_simulation(out, r);
    } else if (mm_cmd->parsed()) {
      if (!spec.distortion) {
        err << "error: mismatch requires a 'distortion' in the spec\n";
        return kExitInvalidInput;
      }
      if (eps && !(*eps > 0.0)) {
        err << "error: --eps must be positive\n";
        return kExitInvalidInput;
      }
      const json r = mismatch_report(spec, eps);
      if (as_json) out << r.dump(2) << '\n';
      else print_mismatch(out, r);
    }
  } catch (const InfeasibleEpsilon& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace noisycommit::cli
