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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtbt/cost.hpp"
#include "rtbt/distance_oracle.hpp"
#include "rtbt/graph_queries.hpp"
#include "rtbt/problem.hpp"
#include "rtbt/stack_path.hpp"

namespace rtbt {

/// How the learning amount u is charged for heuristic increases.
enum class AccountingMode {
  /// Every increase made in a cycle is charged.
  kTotalIncrement,
  /// Only increases on states of the new stack are charged, excluding the
  /// start state always and the old top on backward moves and stays.
  kAxiomExclusion,
};

std::string_view to_string(AccountingMode mode);
AccountingMode parse_accounting_mode(std::string_view text);

struct AlgoParams {
  double theta = 1.0;
  Cost quota = Cost::infinity();
  double gamma = 1.0;      // heuristic weight used by the shipped policies
  double gamma_bar = 1.0;  // upper bound audited for every step
  std::uint32_t d_max = 1;
  std::uint32_t segment_length = 1;
  /// Unset: ties on f broken by smallest state id. Set: uniformly at random.
  std::optional<std::uint64_t> tie_seed;
  AccountingMode accounting = AccountingMode::kTotalIncrement;
  /// When on, a forward move whose learning would push u past the quota is
  /// turned into a backward move (or a stay) in the same cycle. Under axiom
  /// accounting, increases the resulting move would still charge past the
  /// quota are dropped.
  bool enforce_quota = true;
};

/// Throws ConfigError for out-of-range parameters (theta < gamma_bar, ...).
void check_params(const AlgoParams& params);

struct AgentState {
  std::uint64_t t = 0;
  StackPath stack;
  HeuristicTable h;
  Cost u = Cost::zero();
};

enum class Move { kForward, kBackward, kStay };

std::string_view to_string(Move move, bool excise = false);

struct HeuristicUpdate {
  StateId state;
  Cost value;
};

struct StepDecision {
  Move move = Move::kStay;
  StateId next = kNoState;  // forward moves only
  /// Forward move onto a state already on the stack: instead of pushing a
  /// second copy the stack is cut back to the earlier occurrence.
  bool excise = false;
  StateSet lss;
  double gamma = 1.0;
  std::vector<HeuristicUpdate> updates;
};

/// Stack that results from applying a decision's move.
StackPath apply_move(const StackPath& stack, const StepDecision& decision);

struct HeuristicChange {
  StateId state;
  Cost before;
  Cost after;
};

struct StepRecord {
  std::uint64_t t = 0;
  StateId top = kNoState;
  std::size_t stack_len = 0;
  Move move = Move::kStay;
  bool excise = false;
  StateId next_top = kNoState;
  double gamma = 1.0;
  Cost u_before;
  Cost u_after;
  StateSet lss;
  std::vector<HeuristicChange> changes;
};

enum class AxiomCondition {
  kSeparating = 4,
  kGammaRange = 5,
  kForwardPush = 6,
  kBacktrackIncrease = 7,
  kAdmissible = 8,
  kLocality = 9,
  kQuota = 11,
  kStackShape = 100,
};

std::string_view to_string(AxiomCondition c);

struct AuditViolation {
  std::uint64_t t;
  AxiomCondition condition;
  StateId state;
  std::string detail;
};

struct RunResult {
  StackPath final_stack;
  HeuristicTable final_h;
  Cost final_u;
  Cost solution_cost;
  Cost travel_cost;
  std::uint64_t cycles = 0;
  bool reached_goal = false;
  bool timed_out = false;
  std::vector<AuditViolation> audit;
  std::vector<StepRecord> trace;
};

/// Read-only view handed to policies each cycle.
struct SearchContext {
  const ProblemSpec& problem;
  const DistanceOracle& oracle;
  const AlgoParams& params;
};

/// One planning, learning and move decision per cycle of the agent loop.
class StepPolicy {
 public:
  virtual ~StepPolicy() = default;
  virtual std::string name() const = 0;
  /// Called once before the first cycle of a run.
  virtual void reset(const SearchContext& ctx) { (void)ctx; }
  virtual StepDecision decide(const SearchContext& ctx, const AgentState& state) = 0;
  /// Called after the framework applied a decision (possibly converted by
  /// quota enforcement) and produced `after`.
  virtual void observe(const SearchContext& ctx, const AgentState& after,
                       const StepDecision& applied) {
    (void)ctx;
    (void)after;
    (void)applied;
  }
};

using TransitionObserver = std::function<void(
    const AgentState& before, const StepDecision& decision, const AgentState& after)>;

struct RunLimits {
  /// 0 selects default_step_budget().
  std::uint64_t budget = 0;
  bool audit = false;
  bool record_trace = true;
  TransitionObserver observer;
};

/// 10 * |S|^2 * max(1, theta * max h* / epsilon) cycles.
std::uint64_t default_step_budget(const DistanceOracle& oracle, double theta);

struct QuotaResult {
  Cost u;
  bool exceeds_quota = false;
};

/// Learning amount after a transition under the selected accounting mode.
/// exceeds_quota reports u > quota.
QuotaResult update_learning_amount(Cost u_prev, const HeuristicTable& h_before,
                                   const HeuristicTable& h_after,
                                   const StepDecision& decision,
                                   const StackPath& stack_before, StateId start,
                                   AccountingMode mode, Cost quota);

/// Same, with h_after given by the decision's updates applied to h_before.
QuotaResult update_learning_amount(Cost u_prev, const HeuristicTable& h_before,
                                   const StepDecision& decision,
                                   const StackPath& stack_before, StateId start,
                                   AccountingMode mode, Cost quota);

/// Sum of oracle distances between consecutive stack states.
Cost solution_cost(const DistanceOracle& oracle, const StackPath& stack);
Cost solution_cost(const ProblemSpec& problem, const StackPath& stack);

/// Checks one transition against the framework's conditions. Violations are
/// returned, never thrown.
std::vector<AuditViolation> audit_transition(const SearchContext& ctx,
                                             const AgentState& before,
                                             const AgentState& after,
                                             const StepDecision& decision);

AgentState initial_state(const ProblemSpec& problem);

RunResult run_search(StepPolicy& policy, const DistanceOracle& oracle,
                     const AlgoParams& params, const RunLimits& limits = {});
RunResult run_search(StepPolicy& policy, const ProblemSpec& problem,
                     const AlgoParams& params, const RunLimits& limits = {});

}  // namespace rtbt
