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

#include <benchmark/benchmark.h>

#include "noisycommit/noisycommit.hpp"

namespace {

namespace nc = noisycommit;

const nc::PayoffMatrix kReference(-8, 6, 2, -2);
const nc::Channel kReferenceChannel(0.8, 0.2, 0.2, 0.8);
const nc::Distortion kReferenceDistortion(0.9, 0.1, 0.1, 0.9);

void BM_Nash(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nc::nash(kReference));
}
BENCHMARK(BM_Nash);

void BM_VHat(benchmark::State& state) {
  const nc::BinaryDist p(0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nc::v_hat(kReference, kReferenceChannel, p));
  }
}
BENCHMARK(BM_VHat);

void BM_LeaderEquilibrium(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nc::leader_equilibrium(kReference, kReferenceChannel));
  }
}
BENCHMARK(BM_LeaderEquilibrium);

void BM_VTilde(benchmark::State& state) {
  const nc::BinaryDist p(0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nc::v_tilde(kReference, kReferenceChannel, kReferenceDistortion, p));
  }
}
BENCHMARK(BM_VTilde);

void BM_EquilibriumAnalysis(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nc::equilibrium_analysis(kReference, kReferenceChannel, kReferenceDistortion));
  }
}
BENCHMARK(BM_EquilibriumAnalysis);

void BM_EpsilonCommitment(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nc::epsilon_commitment(
        kReference, kReferenceChannel, kReferenceDistortion, 1e-3));
  }
}
BENCHMARK(BM_EpsilonCommitment);

void BM_Simulate(benchmark::State& state) {
  const nc::Equilibrium eq = nc::leader_equilibrium(kReference, kReferenceChannel);
  nc::SimConfig cfg;
  cfg.rounds = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 42;
  cfg.leader_commitment = eq.leader_commitment;
  cfg.follower_policy = eq.follower_policy;
  cfg.channel = kReferenceChannel;
  for (auto _ : state) benchmark::DoNotOptimize(nc::simulate(kReference, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_SimulateReplications(benchmark::State& state) {
  const nc::Equilibrium eq = nc::leader_equilibrium(kReference, kReferenceChannel);
  nc::SimConfig cfg;
  cfg.rounds = 1 << 18;
  cfg.seed = 42;
  cfg.leader_commitment = eq.leader_commitment;
  cfg.follower_policy = eq.follower_policy;
  cfg.channel = kReferenceChannel;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nc::simulate_replications(kReference, cfg, 16, threads));
  }
  state.SetItemsProcessed(state.iterations() * 16 * cfg.rounds);
}
BENCHMARK(BM_SimulateReplications)
    ->Arg(1)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
