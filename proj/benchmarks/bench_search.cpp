// Copyright 2026 The rtbt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>

#include "rtbt/admissibility.hpp"
#include "rtbt/algorithms.hpp"
#include "rtbt/errors.hpp"
#include "rtbt/framework.hpp"
#include "rtbt/generators.hpp"
#include "rtbt/grid_map.hpp"

namespace {

using namespace rtbt;

// Square map with random walls; start top-left, goal bottom-right.
ProblemSpec grid_problem(std::size_t side, double wall_density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution wall(wall_density);
  std::string text;
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      if (x == 0 && y == 0)
        text += 'S';
      else if (x == side - 1 && y == side - 1)
        text += 'G';
      else
        text += wall(rng) ? '#' : '.';
    }
    text += '\n';
  }
  return grid_to_problem(parse_grid_map(text), 1.0, HeuristicKind::kManhattan);
}

// Walls can cut the goal off; retry seeds until connected.
ProblemSpec connected_grid(std::size_t side) {
  for (std::uint64_t seed = 1;; ++seed) {
    try {
      return grid_problem(side, 0.25, seed);
    } catch (const InputError&) {
    }
  }
}

ProblemSpec random_problem(std::size_t size) {
  GenOptions o;
  o.size = size;
  o.seed = 7;
  o.lambda_min = 0.2;
  return gen_problem(o);
}

void BM_DistanceOracle(benchmark::State& state) {
  const ProblemSpec p = random_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    DistanceOracle oracle(p);
    benchmark::DoNotOptimize(oracle.max_goal_distance());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceOracle)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void run_grid(benchmark::State& state, AlgorithmId id, bool acyclic, double quota) {
  const ProblemSpec p = connected_grid(static_cast<std::size_t>(state.range(0)));
  const DistanceOracle oracle(p);
  AlgoParams params;
  params.quota = std::isinf(quota) ? Cost::infinity() : Cost(static_cast<std::int64_t>(quota));
  RunLimits limits;
  limits.record_trace = false;
  {
    // fills the oracle's lazily computed rows
    auto warm = make_policy(id, acyclic);
    run_search(*warm, oracle, params, limits);
  }
  std::uint64_t cycles = 0;
  for (auto _ : state) {
    auto policy = make_policy(id, acyclic);
    const RunResult r = run_search(*policy, oracle, params, limits);
    cycles += r.cycles;
  }
  state.counters["cycles"] =
      benchmark::Counter(static_cast<double>(cycles), benchmark::Counter::kAvgIterations);
  state.counters["cycles_per_s"] =
      benchmark::Counter(static_cast<double>(cycles), benchmark::Counter::kIsRate);
}

void BM_GridLrta(benchmark::State& s) { run_grid(s, AlgorithmId::kLrta, false, INFINITY); }
void BM_GridSla(benchmark::State& s) { run_grid(s, AlgorithmId::kSla, false, INFINITY); }
void BM_GridSlat(benchmark::State& s) { run_grid(s, AlgorithmId::kSlat, false, 10.0); }
void BM_GridSlatAcyclic(benchmark::State& s) { run_grid(s, AlgorithmId::kSlat, true, 10.0); }
void BM_GridPiecewise(benchmark::State& s) { run_grid(s, AlgorithmId::kPiecewise, false, 10.0); }
void BM_GridDynlook(benchmark::State& s) { run_grid(s, AlgorithmId::kDynamicLookahead, false, INFINITY); }
BENCHMARK(BM_GridLrta)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_GridSla)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_GridSlat)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_GridSlatAcyclic)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_GridPiecewise)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_GridDynlook)->Arg(16)->Arg(32);

void BM_AuditOverhead(benchmark::State& state) {
  const ProblemSpec p = connected_grid(32);
  const DistanceOracle oracle(p);
  RunLimits limits;
  limits.audit = state.range(0) != 0;
  for (auto _ : state) {
    LrtaPolicy lrta;
    benchmark::DoNotOptimize(run_search(lrta, oracle, AlgoParams{}, limits).cycles);
  }
}
BENCHMARK(BM_AuditOverhead)->Arg(0)->Arg(1);

void BM_MaxUpdateBound(benchmark::State& state) {
  const ProblemSpec p = random_problem(40);
  const DistanceOracle oracle(p);
  const HeuristicTable h(p.h_init());
  VisitedUnion visited;
  for (StateId s = 0; visited.size() < static_cast<std::size_t>(state.range(0)); ++s)
    if (!p.is_goal(s)) visited.add(s);
  const StateId s = visited.states().front();
  for (auto _ : state)
    benchmark::DoNotOptimize(max_update_bound(oracle, h, visited, s, 1.0).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxUpdateBound)->DenseRange(4, 12, 2);

}  // namespace

BENCHMARK_MAIN();
