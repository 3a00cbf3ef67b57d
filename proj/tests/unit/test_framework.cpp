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

#include <fstream>
#include <functional>
#include <sstream>

#include "../support/corpus.hpp"
#include "rtbt/algorithms.hpp"
#include "rtbt/errors.hpp"
#include "rtbt/framework.hpp"
#include "rtbt/generators.hpp"
#include "rtbt/trace_io.hpp"

#ifndef RTBT_TEST_DATA
#define RTBT_TEST_DATA "tests/data"
#endif

namespace rtbt {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class ScriptedPolicy final : public StepPolicy {
 public:
  using Script = std::function<StepDecision(const SearchContext&, const AgentState&)>;
  explicit ScriptedPolicy(Script s) : script_(std::move(s)) {}
  std::string name() const override { return "scripted"; }
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override {
    return script_(ctx, state);
  }

 private:
  Script script_;
};

struct Fixture {
  ProblemSpec problem = chain4_problem();
  DistanceOracle oracle{problem};
  AlgoParams params;
  StateId A = problem.id("A"), B = problem.id("B"), C = problem.id("C"), D = problem.id("D");

  SearchContext ctx() const { return {problem, oracle, params}; }

  AgentState after(const AgentState& before, const StepDecision& d, Cost u) const {
    AgentState a = before;
    a.t = before.t + 1;
    for (const auto& up : d.updates) a.h.set(up.state, up.value);
    a.stack = apply_move(before.stack, d);
    a.u = u;
    return a;
  }

  bool has(const std::vector<AuditViolation>& v, AxiomCondition c) const {
    for (const auto& x : v)
      if (x.condition == c) return true;
    return false;
  }
};

// Golden traces ------------------------------------------------------------

TEST(GoldenTrace, LrtaChain4Csv) {
  LrtaPolicy lrta;
  const RunResult r = run_search(lrta, chain4_problem(), AlgoParams{});
  EXPECT_EQ(emit_trace(chain4_problem(), r.trace, TraceFormat::kCsv),
            read_file(std::string(RTBT_TEST_DATA) + "/chain4_lrta.csv"));
}

TEST(GoldenTrace, LrtaChain4Table) {
  LrtaPolicy lrta;
  const RunResult r = run_search(lrta, chain4_problem(), AlgoParams{});
  EXPECT_EQ(emit_trace(chain4_problem(), r.trace, TraceFormat::kTable),
            read_file(std::string(RTBT_TEST_DATA) + "/chain4_lrta.table"));
}

TEST(GoldenTrace, LrtaChain4Values) {
  Fixture f;
  LrtaPolicy lrta;
  RunLimits limits;
  limits.audit = true;
  const RunResult r = run_search(lrta, f.oracle, f.params, limits);
  ASSERT_EQ(r.trace.size(), 4u);
  EXPECT_TRUE(r.audit.empty());
  // h(C): 1 -> 1.7 -> 2.0, h(D): 0.7 -> 2.7, in tenths
  ASSERT_EQ(r.trace[0].changes.size(), 1u);
  EXPECT_EQ(r.trace[0].changes[0].state, f.C);
  EXPECT_EQ(r.trace[0].changes[0].after.units(), 17);
  EXPECT_EQ(r.trace[1].changes[0].state, f.D);
  EXPECT_EQ(r.trace[1].changes[0].after.units(), 27);
  EXPECT_EQ(r.trace[2].changes[0].after.units(), 20);
  EXPECT_TRUE(r.trace[3].changes.empty());
  const std::vector<Cost::Units> u{0, 7, 27, 30};
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(r.trace[t].u_before.units(), u[t]);
  EXPECT_EQ(r.final_u.units(), 30);
  EXPECT_EQ(r.final_stack, StackPath(std::vector<StateId>{f.C, f.D, f.C, f.B, f.A}));
  EXPECT_EQ(r.solution_cost.units(), 40);
  EXPECT_EQ(r.travel_cost.units(), 40);
  EXPECT_TRUE(r.reached_goal);
}

// apply_move / learning amount ---------------------------------------------

TEST(Framework, ApplyMove) {
  StackPath s(std::vector<StateId>{0, 1, 2});
  StepDecision fwd;
  fwd.move = Move::kForward;
  fwd.next = 5;
  EXPECT_EQ(apply_move(s, fwd).states().back(), 5u);
  fwd.next = 1;
  fwd.excise = true;
  EXPECT_EQ(apply_move(s, fwd), StackPath(std::vector<StateId>{0, 1}));
  StepDecision back;
  back.move = Move::kBackward;
  EXPECT_EQ(apply_move(s, back).size(), 2u);
  EXPECT_THROW(apply_move(StackPath(0), back), FrameworkError);
  EXPECT_EQ(apply_move(s, StepDecision{}), s);
}

TEST(Framework, LearningAmountModes) {
  Fixture f;
  const HeuristicTable h(f.problem.h_init());
  const StackPath stack(std::vector<StateId>{f.C, f.D});
  StepDecision back;
  back.move = Move::kBackward;
  back.updates = {{f.D, Cost(27)}, {f.B, Cost(15)}};

  auto total = update_learning_amount(Cost(5), h, back, stack, f.C,
                                      AccountingMode::kTotalIncrement, Cost(100));
  EXPECT_EQ(total.u.units(), 5 + 20 + 5);
  // axiom: D is the old top of a backward move, B is not on the new stack
  auto axiom = update_learning_amount(Cost(5), h, back, stack, f.C,
                                      AccountingMode::kAxiomExclusion, Cost(4));
  EXPECT_EQ(axiom.u.units(), 5);
  EXPECT_TRUE(axiom.exceeds_quota);

  StepDecision fwd;
  fwd.move = Move::kForward;
  fwd.next = f.B;
  fwd.updates = {{f.B, Cost(15)}, {f.C, Cost(19)}};
  // C is the start state: never charged in axiom mode
  auto a2 = update_learning_amount(Cost(0), h, fwd, StackPath(f.C), f.C,
                                   AccountingMode::kAxiomExclusion, Cost::infinity());
  EXPECT_EQ(a2.u.units(), 5);
  EXPECT_FALSE(a2.exceeds_quota);
}

TEST(Framework, DefaultBudget) {
  Fixture f;
  // 10 * 4^2 * max(1, 1 * 30 tenths)
  EXPECT_EQ(default_step_budget(f.oracle, 1.0), 10u * 16u * 30u);
}

TEST(Framework, SolutionCostSumsOracleDistances) {
  Fixture f;
  EXPECT_EQ(solution_cost(f.oracle, StackPath(std::vector<StateId>{f.C, f.D, f.C, f.B, f.A})).units(),
            40);
  EXPECT_EQ(solution_cost(f.problem, StackPath(std::vector<StateId>{f.C, f.A})).units(), 20);
}

TEST(Framework, RejectsBadParams) {
  AlgoParams p;
  p.gamma_bar = 2.0;
  EXPECT_THROW(check_params(p), ConfigError);
  AlgoParams q;
  q.segment_length = 0;
  EXPECT_THROW(check_params(q), ConfigError);
}

TEST(Framework, ParsesNames) {
  EXPECT_EQ(parse_accounting_mode("axiom"), AccountingMode::kAxiomExclusion);
  EXPECT_THROW(parse_accounting_mode("nope"), ConfigError);
  EXPECT_EQ(to_string(Move::kForward, true), "forward-excise");
  EXPECT_EQ(to_string(Move::kBackward), "backward");
}

// Auditor ------------------------------------------------------------------

TEST(Audit, CleanLrtaStepPasses) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.move = Move::kForward;
  d.next = f.D;
  d.lss = {f.B, f.D};
  d.updates = {{f.C, Cost(17)}};
  EXPECT_TRUE(audit_transition(f.ctx(), s, f.after(s, d, Cost(7)), d).empty());
}

TEST(Audit, CatchesNonSeparatingSpace) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.move = Move::kForward;
  d.next = f.D;
  d.lss = {f.D};
  d.updates = {{f.C, Cost(17)}};
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(7)), d),
                    AxiomCondition::kSeparating));
}

TEST(Audit, CatchesGammaAboveBound) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.lss = {f.B, f.D};
  d.gamma = 1.5;
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(0)), d),
                    AxiomCondition::kGammaRange));
}

TEST(Audit, CatchesForwardPushWithoutLearning) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.move = Move::kForward;
  d.next = f.D;
  d.lss = {f.B, f.D};
  // h(C) = 1 < dist(C,D) + h(D) = 1.7
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(0)), d),
                    AxiomCondition::kForwardPush));
}

TEST(Audit, CatchesBacktrackWithoutIncrease) {
  Fixture f;
  AgentState s = initial_state(f.problem);
  s.stack.push(f.D);
  StepDecision d;
  d.move = Move::kBackward;
  d.lss = {f.C};
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(0)), d),
                    AxiomCondition::kBacktrackIncrease));
}

TEST(Audit, CatchesInadmissibleUpdate) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.lss = {f.B, f.D};
  d.updates = {{f.B, Cost(11)}};  // h*(B) = 1
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(1)), d),
                    AxiomCondition::kAdmissible));
}

TEST(Audit, CatchesNonLocalAndDecreasingUpdates) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision outside;
  outside.lss = {f.B, f.D};
  outside.updates = {{f.D, Cost(5)}};
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, outside, Cost(0)), outside),
                    AxiomCondition::kLocality));
  StepDecision far;
  far.lss = {f.B};
  far.updates = {{f.D, Cost(8)}};
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, far, Cost(1)), far),
                    AxiomCondition::kLocality));
}

TEST(Audit, CatchesQuotaOverrunAndWrongBookkeeping) {
  Fixture f;
  f.params.quota = Cost(5);
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.move = Move::kForward;
  d.next = f.D;
  d.lss = {f.B, f.D};
  d.updates = {{f.C, Cost(17)}};
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(7)), d), AxiomCondition::kQuota));
  f.params.quota = Cost::infinity();
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, f.after(s, d, Cost(3)), d), AxiomCondition::kQuota));
}

TEST(Audit, CatchesBrokenStackShape) {
  Fixture f;
  const AgentState s = initial_state(f.problem);
  StepDecision d;
  d.move = Move::kForward;
  d.next = f.D;
  d.lss = {f.B, f.D};
  d.updates = {{f.C, Cost(17)}};
  AgentState bad = f.after(s, d, Cost(7));
  bad.stack.push(f.C);
  EXPECT_TRUE(f.has(audit_transition(f.ctx(), s, bad, d), AxiomCondition::kStackShape));
}

// run_search contract ------------------------------------------------------

TEST(RunSearch, ForwardOutsideLocalSpaceThrows) {
  ScriptedPolicy p([](const SearchContext& ctx, const AgentState&) {
    StepDecision d;
    d.move = Move::kForward;
    d.next = ctx.problem.id("A");
    d.lss = {ctx.problem.id("B")};
    return d;
  });
  EXPECT_THROW(run_search(p, chain4_problem(), AlgoParams{}), FrameworkError);
}

TEST(RunSearch, BackwardAtStartThrows) {
  ScriptedPolicy p([](const SearchContext& ctx, const AgentState&) {
    StepDecision d;
    d.move = Move::kBackward;
    d.lss = {ctx.problem.id("B"), ctx.problem.id("D")};
    return d;
  });
  EXPECT_THROW(run_search(p, chain4_problem(), AlgoParams{}), FrameworkError);
}

TEST(RunSearch, TimesOutAtBudget) {
  ScriptedPolicy idle([](const SearchContext& ctx, const AgentState&) {
    StepDecision d;
    d.lss = {ctx.problem.id("B"), ctx.problem.id("D")};
    return d;
  });
  RunLimits limits;
  limits.budget = 17;
  const RunResult r = run_search(idle, chain4_problem(), AlgoParams{}, limits);
  EXPECT_TRUE(r.timed_out);
  EXPECT_FALSE(r.reached_goal);
  EXPECT_EQ(r.cycles, 17u);
  EXPECT_EQ(r.trace.size(), 17u);
}

TEST(RunSearch, QuotaEnforcementTurnsForwardIntoBacktrack) {
  Fixture f;
  f.params.quota = Cost(10);
  LrtaPolicy lrta;
  RunLimits limits;
  limits.audit = true;
  const RunResult r = run_search(lrta, f.oracle, f.params, limits);
  EXPECT_TRUE(r.audit.empty());
  ASSERT_GE(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].move, Move::kForward);
  // the second learning step would reach u = 2.7 > 1 on a forward move
  EXPECT_EQ(r.trace[1].move, Move::kBackward);
  EXPECT_TRUE(r.reached_goal);
}

TEST(RunSearch, ObserverSeesEveryTransition) {
  std::size_t calls = 0;
  RunLimits limits;
  limits.observer = [&](const AgentState& before, const StepDecision&, const AgentState& after) {
    EXPECT_EQ(after.t, before.t + 1);
    ++calls;
  };
  SlaPolicy sla;
  const RunResult r = run_search(sla, chain4_problem(), AlgoParams{}, limits);
  EXPECT_EQ(calls, r.cycles);
}

TEST(RunSearch, StartAtGoalTakesNoCycles) {
  const ProblemSpec p = chain4_problem().with_start(chain4_problem().id("A"));
  LrtaPolicy lrta;
  const RunResult r = run_search(lrta, p, AlgoParams{});
  EXPECT_EQ(r.cycles, 0u);
  EXPECT_TRUE(r.reached_goal);
  EXPECT_EQ(r.solution_cost, Cost::zero());
}

}  // namespace
}  // namespace rtbt
