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

#include <gtest/gtest.h>

#include "../support/corpus.hpp"
#include "rtbt/algorithms.hpp"
#include "rtbt/errors.hpp"
#include "rtbt/generators.hpp"
#include "rtbt/grid_map.hpp"

namespace rtbt {
namespace {

RunResult audited(StepPolicy& policy, const ProblemSpec& p, const AlgoParams& params = {}) {
  RunLimits limits;
  limits.audit = true;
  return run_search(policy, p, params, limits);
}

std::vector<StateId> ids(const ProblemSpec& p, std::initializer_list<const char*> names) {
  std::vector<StateId> out;
  for (const char* n : names) out.push_back(p.id(n));
  return out;
}

TEST(Sla, Chain4) {
  const ProblemSpec p = chain4_problem();
  SlaPolicy sla;
  const RunResult r = audited(sla, p);
  EXPECT_TRUE(r.audit.empty());
  ASSERT_EQ(r.trace.size(), 6u);
  const std::vector<Move> moves{Move::kStay,    Move::kForward, Move::kBackward,
                                Move::kStay,    Move::kForward, Move::kForward};
  for (std::size_t t = 0; t < moves.size(); ++t) EXPECT_EQ(r.trace[t].move, moves[t]) << t;
  EXPECT_EQ(r.final_h[p.id("D")].units(), 27);
  EXPECT_EQ(r.final_h[p.id("C")].units(), 20);
  EXPECT_EQ(r.final_stack, StackPath(ids(p, {"C", "B", "A"})));
  EXPECT_EQ(r.solution_cost.units(), 20);
  EXPECT_EQ(r.travel_cost.units(), 40);
}

TEST(Slat, Chain4WithQuotaOne) {
  const ProblemSpec p = chain4_problem();
  AlgoParams params;
  params.quota = Cost(10);
  SlatPolicy slat;
  const RunResult r = audited(slat, p, params);
  EXPECT_TRUE(r.audit.empty());
  ASSERT_GE(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].move, Move::kForward);
  EXPECT_EQ(r.trace[0].u_after.units(), 7);
  EXPECT_EQ(r.trace[1].move, Move::kBackward);
  EXPECT_EQ(r.trace[1].u_after.units(), 27);
  EXPECT_TRUE(r.reached_goal);
}

TEST(Slat, InfiniteQuotaIsLrta) {
  for (const auto& np : testing::make_corpus(30, 2, 60)) {
    LrtaPolicy lrta;
    SlatPolicy slat;
    const RunResult a = run_search(lrta, *np.problem, AlgoParams{});
    const RunResult b = run_search(slat, *np.problem, AlgoParams{});
    EXPECT_EQ(a.final_stack, b.final_stack) << np.id;
    EXPECT_EQ(a.final_h, b.final_h) << np.id;
  }
}

TEST(Slat, ZeroQuotaIsSla) {
  for (const auto& np : testing::make_corpus(30, 2, 60)) {
    AlgoParams params;
    params.quota = Cost::zero();
    SlaPolicy sla;
    SlatPolicy slat;
    const RunResult a = run_search(sla, *np.problem, params);
    const RunResult b = run_search(slat, *np.problem, params);
    EXPECT_EQ(a.final_stack, b.final_stack) << np.id;
    EXPECT_EQ(a.solution_cost, b.solution_cost) << np.id;
  }
}

TEST(Acyclic, Chain4Lrta) {
  const ProblemSpec p = chain4_problem();
  auto policy = make_policy(AlgorithmId::kLrta, true);
  const RunResult r = audited(*policy, p);
  EXPECT_TRUE(r.audit.empty());
  EXPECT_EQ(r.final_stack, StackPath(ids(p, {"C", "B", "A"})));
  EXPECT_FALSE(r.final_stack.has_duplicates());
  EXPECT_EQ(policy->name(), "lrta+acyclic");
}

TEST(Acyclic, Chain4SlatQuotaOne) {
  AlgoParams params;
  params.quota = Cost(10);
  auto policy = make_policy(AlgorithmId::kSlat, true);
  const RunResult r = audited(*policy, chain4_problem(), params);
  EXPECT_TRUE(r.audit.empty());
  EXPECT_EQ(r.solution_cost.units(), 20);
}

TEST(Acyclic, StacksNeverRepeatStates) {
  for (const auto& np : testing::make_corpus(40, 2, 80)) {
    for (AlgorithmId id : {AlgorithmId::kLrta, AlgorithmId::kSlat, AlgorithmId::kPiecewise}) {
      auto policy = make_policy(id, true);
      RunLimits limits;
      limits.audit = true;
      limits.observer = [&](const AgentState&, const StepDecision&, const AgentState& after) {
        EXPECT_FALSE(after.stack.has_duplicates()) << np.id;
      };
      AlgoParams params;
      params.quota = Cost(3);
      const RunResult r = run_search(*policy, *np.problem, params, limits);
      EXPECT_TRUE(r.audit.empty()) << np.id << " " << policy->name();
    }
  }
}

TEST(Piecewise, Chain4SegmentLengthOne) {
  const ProblemSpec p = chain4_problem();
  AlgoParams params;
  params.segment_length = 1;
  PiecewisePolicy pw;
  const RunResult r = audited(pw, p, params);
  EXPECT_TRUE(r.audit.empty());
  EXPECT_EQ(r.final_stack, StackPath(ids(p, {"C", "D", "C", "B", "A"})));
  EXPECT_EQ(r.solution_cost.units(), 40);
}

TEST(Piecewise, SegmentsRespectLength) {
  for (const auto& np : testing::make_corpus(30, 10, 80)) {
    for (std::uint32_t k : {1u, 3u}) {
      AlgoParams params;
      params.segment_length = k;
      params.quota = Cost(4);
      PiecewisePolicy pw;
      const RunResult r = audited(pw, *np.problem, params);
      EXPECT_TRUE(r.audit.empty());
      const SegmentState& seg = pw.segments();
      ASSERT_FALSE(seg.begins.empty());
      EXPECT_EQ(seg.begins.front(), 0u);
      for (std::size_t i = 1; i < seg.begins.size(); ++i) {
        EXPECT_LT(seg.begins[i - 1], seg.begins[i]);
        EXPECT_LE(seg.begins[i] - seg.begins[i - 1], k);
      }
    }
  }
}

TEST(Piecewise, DiscrepancySumOfSingleSegmentIsZero) {
  const ProblemSpec p = chain4_problem();
  const DistanceOracle oracle(p);
  const StackPath stack(ids(p, {"C", "B"}));
  EXPECT_EQ(segment_discrepancy(oracle, stack, {0}, HeuristicTable(p.h_init())), 0);
}

TEST(DynamicLookahead, Chain4StartIsOneTrap) {
  const ProblemSpec p = chain4_problem();
  const DistanceOracle oracle(p);
  AlgoParams params;
  params.d_max = 3;
  DynamicLookaheadPolicy dyn;
  const SearchContext ctx{p, oracle, params};
  dyn.reset(ctx);
  const StepDecision d = dyn.decide(ctx, initial_state(p));
  EXPECT_EQ(dyn.last_depth(), 2u);
  EXPECT_EQ(d.move, Move::kForward);
  EXPECT_EQ(d.next, p.id("A"));
  Cost hc = p.h_init()[p.id("C")], hd = p.h_init()[p.id("D")];
  for (const auto& u : d.updates) {
    if (u.state == p.id("C")) hc = u.value;
    if (u.state == p.id("D")) hd = u.value;
  }
  EXPECT_EQ(hc.units(), 20);
  EXPECT_EQ(hd.units(), 30);
}

TEST(DynamicLookahead, DepthOneNeverExceedsOne) {
  const ProblemSpec p = chain4_problem();
  AlgoParams params;
  params.d_max = 1;
  DynamicLookaheadPolicy dyn;
  RunLimits limits;
  limits.audit = true;
  limits.observer = [&](const AgentState&, const StepDecision&, const AgentState&) {
    EXPECT_EQ(dyn.last_depth(), 1u);
  };
  const RunResult r = run_search(dyn, p, params, limits);
  EXPECT_TRUE(r.audit.empty());
  EXPECT_TRUE(r.reached_goal);
}

TEST(DynamicLookahead, DeepRunsPassAudit) {
  for (const auto& np : testing::make_corpus(40, 2, 100)) {
    AlgoParams params;
    params.d_max = 4;
    DynamicLookaheadPolicy dyn;
    const RunResult r = audited(dyn, *np.problem, params);
    EXPECT_TRUE(r.audit.empty()) << np.id;
    EXPECT_TRUE(r.reached_goal) << np.id;
  }
}

TEST(Algorithms, SizeTwoChainSolvedInOneCycle) {
  GenOptions o;
  o.kind = GenKind::kChain;
  o.size = 2;
  const ProblemSpec p = gen_problem(o);
  for (AlgorithmId id : {AlgorithmId::kLrta, AlgorithmId::kSla, AlgorithmId::kSlat,
                         AlgorithmId::kDynamicLookahead, AlgorithmId::kPiecewise}) {
    auto policy = make_policy(id);
    const RunResult r = audited(*policy, p);
    EXPECT_EQ(r.cycles, 1u) << policy->name();
    EXPECT_TRUE(r.audit.empty());
  }
}

TEST(Algorithms, ExactHeuristicMeansNoLearning) {
  const GridMap map = parse_grid_map("S..#\n.#..\n...G\n");
  const ProblemSpec p = grid_to_problem(map, 1.0, HeuristicKind::kExact);
  SlaPolicy sla;
  const RunResult r = audited(sla, p);
  EXPECT_TRUE(r.audit.empty());
  for (const auto& rec : r.trace) EXPECT_TRUE(rec.changes.empty());
  EXPECT_EQ(r.final_u, Cost::zero());
  EXPECT_EQ(r.solution_cost, goal_distance(p, p.start()));
}

TEST(Algorithms, SlaIsOptimalOnCorpus) {
  for (const auto& np : testing::make_corpus(60, 2, 60)) {
    SlaPolicy sla;
    const RunResult r = audited(sla, *np.problem);
    const DistanceOracle oracle(*np.problem);
    EXPECT_EQ(r.solution_cost, oracle.goal_distance(np.problem->start())) << np.id;
    for (StateId s : r.final_stack.states()) EXPECT_EQ(r.final_h[s], oracle.goal_distance(s));
  }
}

TEST(Algorithms, TieSeedIsDeterministic) {
  const auto corpus = testing::make_corpus(10, 20, 60);
  for (const auto& np : corpus) {
    AlgoParams params;
    params.tie_seed = 99;
    LrtaPolicy a, b;
    const RunResult ra = run_search(a, *np.problem, params);
    const RunResult rb = run_search(b, *np.problem, params);
    EXPECT_EQ(ra.final_stack, rb.final_stack);
    EXPECT_EQ(ra.cycles, rb.cycles);
  }
}

TEST(Algorithms, TieBreakerDefaultsToSmallestId) {
  TieBreaker ties;
  ties.reset(AlgoParams{});
  EXPECT_EQ(ties.pick_min({4, 2, 9}, {Cost(3), Cost(1), Cost(1)}), 1u);
}

TEST(Algorithms, SelfLoopOnlyStateThrows) {
  ProblemBuilder b;
  b.add_edge("a", "a", Cost(1));
  b.add_edge("g", "a", Cost(1));
  b.add_goal("g");
  b.set_start("a");
  const ProblemSpec p = b.build();
  LrtaPolicy lrta;
  EXPECT_THROW(run_search(lrta, p, AlgoParams{}), FrameworkError);
}

TEST(Algorithms, NamesRoundTrip) {
  for (AlgorithmId id : {AlgorithmId::kLrta, AlgorithmId::kSla, AlgorithmId::kSlat,
                         AlgorithmId::kDynamicLookahead, AlgorithmId::kPiecewise}) {
    EXPECT_EQ(parse_algorithm(to_string(id)), id);
    EXPECT_EQ(make_policy(id)->name(), to_string(id));
  }
  EXPECT_THROW(parse_algorithm("astar"), ConfigError);
}

}  // namespace
}  // namespace rtbt
