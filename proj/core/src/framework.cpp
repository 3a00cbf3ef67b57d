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

#include "rtbt/framework.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rtbt/errors.hpp"
#include "rtbt/validation.hpp"

namespace rtbt {

std::string_view to_string(AccountingMode mode) {
  return mode == AccountingMode::kTotalIncrement ? "total" : "axiom";
}

AccountingMode parse_accounting_mode(std::string_view text) {
  if (text == "total") return AccountingMode::kTotalIncrement;
  if (text == "axiom") return AccountingMode::kAxiomExclusion;
  throw ConfigError("unknown accounting mode '" + std::string(text) + "'");
}

std::string_view to_string(Move move, bool excise) {
  switch (move) {
    case Move::kForward: return excise ? "forward-excise" : "forward";
    case Move::kBackward: return "backward";
    case Move::kStay: return "stay";
  }
  return "?";
}

std::string_view to_string(AxiomCondition c) {
  switch (c) {
    case AxiomCondition::kSeparating: return "separating-set";
    case AxiomCondition::kGammaRange: return "gamma-range";
    case AxiomCondition::kForwardPush: return "forward-push";
    case AxiomCondition::kBacktrackIncrease: return "backtrack-increase";
    case AxiomCondition::kAdmissible: return "theta-admissible";
    case AxiomCondition::kLocality: return "update-locality";
    case AxiomCondition::kQuota: return "quota";
    case AxiomCondition::kStackShape: return "stack-shape";
  }
  return "?";
}

void check_params(const AlgoParams& p) {
  if (!(p.theta > 0.0)) throw ConfigError("theta must be positive");
  if (!(p.gamma > 0.0) || p.gamma > p.gamma_bar)
    throw ConfigError("gamma must lie in (0, gamma_bar]");
  if (p.theta < p.gamma_bar) throw ConfigError("theta must be at least gamma_bar");
  if (p.d_max == 0) throw ConfigError("dmax must be positive");
  if (p.segment_length == 0) throw ConfigError("k must be positive");
  if (p.quota < Cost::zero()) throw ConfigError("quota must be non-negative");
}

std::optional<std::size_t> StackPath::index_of(StateId s) const {
  auto it = std::find(states_.begin(), states_.end(), s);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

bool StackPath::has_duplicates() const {
  std::vector<StateId> sorted = states_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

StackPath apply_move(const StackPath& stack, const StepDecision& d) {
  StackPath next = stack;
  switch (d.move) {
    case Move::kForward:
      if (d.excise) {
        if (auto i = stack.index_of(d.next)) {
          next.truncate(*i + 1);
          break;
        }
      }
      next.push(d.next);
      break;
    case Move::kBackward:
      if (stack.size() < 2) throw FrameworkError("backward move with a single-state stack");
      next.pop();
      break;
    case Move::kStay:
      break;
  }
  return next;
}

std::uint64_t default_step_budget(const DistanceOracle& oracle, double theta) {
  const double n = static_cast<double>(oracle.problem().size());
  const double headroom =
      std::max(1.0, theta * static_cast<double>(oracle.max_goal_distance().units()));
  const double budget = 10.0 * n * n * headroom;
  return budget > 1e18 ? static_cast<std::uint64_t>(1e18)
                       : static_cast<std::uint64_t>(std::ceil(budget));
}

namespace {

// States whose increases are not charged in axiom-exclusion mode.
bool excluded(StateId s, StateId start, StateId old_top, Move move) {
  if (s == start) return true;
  return move != Move::kForward && s == old_top;
}

}  // namespace

QuotaResult update_learning_amount(Cost u_prev, const HeuristicTable& h_before,
                                   const HeuristicTable& h_after, const StepDecision& d,
                                   const StackPath& stack_before, StateId start,
                                   AccountingMode mode, Cost quota) {
  Cost::Units charge = 0;
  if (mode == AccountingMode::kTotalIncrement) {
    for (StateId s = 0; s < h_before.size(); ++s)
      if (h_after[s] > h_before[s]) charge += (h_after[s] - h_before[s]).units();
  } else {
    const StackPath after = apply_move(stack_before, d);
    const StateSet on_stack = make_state_set({after.states().begin(), after.states().end()});
    for (StateId s : on_stack) {
      if (excluded(s, start, stack_before.top(), d.move)) continue;
      if (h_after[s] > h_before[s]) charge += (h_after[s] - h_before[s]).units();
    }
  }
  QuotaResult r;
  r.u = u_prev + Cost(charge);
  r.exceeds_quota = quota.is_finite() && r.u > quota;
  return r;
}

QuotaResult update_learning_amount(Cost u_prev, const HeuristicTable& h_before,
                                   const StepDecision& d, const StackPath& stack_before,
                                   StateId start, AccountingMode mode, Cost quota) {
  if (mode == AccountingMode::kTotalIncrement) {
    // only the touched states can contribute
    Cost::Units charge = 0;
    for (const HeuristicUpdate& up : d.updates)
      if (up.value > h_before[up.state]) charge += (up.value - h_before[up.state]).units();
    QuotaResult r;
    r.u = u_prev + Cost(charge);
    r.exceeds_quota = quota.is_finite() && r.u > quota;
    return r;
  }
  HeuristicTable after = h_before;
  for (const HeuristicUpdate& up : d.updates) after.set(up.state, up.value);
  return update_learning_amount(u_prev, h_before, after, d, stack_before, start, mode, quota);
}

Cost solution_cost(const DistanceOracle& oracle, const StackPath& stack) {
  Cost total = Cost::zero();
  for (std::size_t j = 1; j < stack.size(); ++j)
    total += oracle.distance(stack.at(j - 1), stack.at(j));
  return total;
}

Cost solution_cost(const ProblemSpec& problem, const StackPath& stack) {
  return solution_cost(DistanceOracle(problem), stack);
}

std::vector<AuditViolation> audit_transition(const SearchContext& ctx,
                                             const AgentState& before,
                                             const AgentState& after,
                                             const StepDecision& d) {
  const ProblemSpec& problem = ctx.problem;
  const DistanceOracle& oracle = ctx.oracle;
  const AlgoParams& params = ctx.params;
  const double eps = problem.epsilon();
  std::vector<AuditViolation> out;
  const std::uint64_t t = before.t;
  const StateId top = before.stack.top();
  auto report = [&](AxiomCondition c, StateId s, std::string detail) {
    out.push_back({t, c, s, std::move(detail)});
  };

  if (!problem.is_goal(top) && !is_separating(oracle, top, d.lss))
    report(AxiomCondition::kSeparating, top,
           "local search space does not separate " + problem.name(top) + " from the goals");

  if (!(d.gamma > 0.0) || d.gamma > params.gamma_bar)
    report(AxiomCondition::kGammaRange, top, "gamma outside (0, gamma_bar]");

  // stack bookkeeping
  const StackPath& sb = before.stack;
  const StackPath& sa = after.stack;
  bool shape_ok = !sa.empty() && sa.bottom() == problem.start();
  switch (d.move) {
    case Move::kForward: {
      if (d.excise && sb.contains(d.next)) {
        const std::size_t i = *sb.index_of(d.next);
        shape_ok = shape_ok && sa.size() == i + 1 &&
                   std::equal(sa.states().begin(), sa.states().end(), sb.states().begin());
      } else {
        shape_ok = shape_ok && sa.size() == sb.size() + 1 && sa.top() == d.next &&
                   std::equal(sb.states().begin(), sb.states().end(), sa.states().begin());
      }
      break;
    }
    case Move::kBackward:
      shape_ok = shape_ok && sa.size() + 1 == sb.size() &&
                 std::equal(sa.states().begin(), sa.states().end(), sb.states().begin());
      break;
    case Move::kStay:
      shape_ok = shape_ok && sa == sb;
      break;
  }
  if (!shape_ok) report(AxiomCondition::kStackShape, top, "stack does not follow the move");

  if (d.move == Move::kForward) {
    const bool in_lss = std::binary_search(d.lss.begin(), d.lss.end(), d.next);
    const Cost f = weighted(d.gamma, oracle.distance(top, d.next)) + after.h[d.next];
    if (!in_lss) {
      report(AxiomCondition::kForwardPush, d.next, "pushed state is outside the local search space");
    } else if (after.h[top] < f) {
      report(AxiomCondition::kForwardPush, top,
             "h(" + problem.name(top) + ") = " + format_cost(after.h[top], eps) +
                 " below gamma * dist + h(next) = " + format_cost(f, eps));
    }
  }

  if (d.move == Move::kBackward && !(after.h[top] > before.h[top]))
    report(AxiomCondition::kBacktrackIncrease, top,
           "backtracked without raising h(" + problem.name(top) + ")");

  // admissibility and locality over changed states
  bool any_forward_learning = false;
  for (StateId s = 0; s < problem.size(); ++s) {
    if (after.h[s] == before.h[s]) continue;
    const bool local = s == top || std::binary_search(d.lss.begin(), d.lss.end(), s);
    if (!local)
      report(AxiomCondition::kLocality, s,
             "h(" + problem.name(s) + ") changed outside the local search space");
    if (after.h[s] < before.h[s])
      report(AxiomCondition::kLocality, s, "h(" + problem.name(s) + ") decreased");
    if (!within_weighted(after.h[s], params.theta, oracle.goal_distance(s)))
      report(AxiomCondition::kAdmissible, s,
             "h(" + problem.name(s) + ") = " + format_cost(after.h[s], eps) +
                 " exceeds theta * h* = " + std::to_string(params.theta) + " * " +
                 format_cost(oracle.goal_distance(s), eps));
    any_forward_learning = any_forward_learning || (after.h[s] > before.h[s]);
  }

  const QuotaResult expected =
      update_learning_amount(before.u, before.h, after.h, d, sb, problem.start(),
                             params.accounting, params.quota);
  if (after.u != expected.u)
    report(AxiomCondition::kQuota, top,
           "learning amount " + format_cost(after.u, eps) + " differs from expected " +
               format_cost(expected.u, eps));
  if (params.quota.is_finite() && after.u > params.quota) {
    const bool binding = params.accounting == AccountingMode::kAxiomExclusion ||
                         (d.move == Move::kForward && any_forward_learning &&
                          after.u > before.u);
    if (binding)
      report(AxiomCondition::kQuota, top,
             "learning amount " + format_cost(after.u, eps) + " exceeds the quota " +
                 format_cost(params.quota, eps));
  }
  return out;
}

AgentState initial_state(const ProblemSpec& problem) {
  AgentState s;
  s.t = 0;
  s.stack = StackPath(problem.start());
  s.h = HeuristicTable(problem.h_init());
  s.u = Cost::zero();
  return s;
}

namespace {

// Backtracking variant of a forward decision whose learning breaks the quota.
StepDecision backtracking_variant(const StepDecision& d, const AgentState& state) {
  StepDecision out = d;
  out.excise = false;
  out.next = kNoState;
  const StateId top = state.stack.top();
  const bool raises_top = std::any_of(d.updates.begin(), d.updates.end(), [&](const auto& u) {
    return u.state == top && u.value > state.h[top];
  });
  out.move = (raises_top && state.stack.size() >= 2) ? Move::kBackward : Move::kStay;
  return out;
}

// Drops increases that a non-forward move would charge against the quota.
// Increases on the old top and on states off the new stack are kept.
StepDecision strip_charged_updates(const StepDecision& d, const AgentState& state,
                                   StateId start) {
  StepDecision out = d;
  const StackPath after = apply_move(state.stack, d);
  std::erase_if(out.updates, [&](const HeuristicUpdate& up) {
    return up.value > state.h[up.state] && after.contains(up.state) &&
           !excluded(up.state, start, state.stack.top(), d.move);
  });
  return out;
}

}  // namespace

RunResult run_search(StepPolicy& policy, const DistanceOracle& oracle,
                     const AlgoParams& params, const RunLimits& limits) {
  check_params(params);
  const ProblemSpec& problem = oracle.problem();
  const SearchContext ctx{problem, oracle, params};
  const std::uint64_t budget =
      limits.budget ? limits.budget : default_step_budget(oracle, params.theta);

  RunResult result;
  AgentState state = initial_state(problem);
  Cost travel = Cost::zero();
  policy.reset(ctx);

  while (!problem.is_goal(state.stack.top())) {
    if (state.t >= budget) {
      result.timed_out = true;
      break;
    }
    StepDecision d = policy.decide(ctx, state);
    const StateId top = state.stack.top();
    d.lss = make_state_set(std::move(d.lss));
    if (d.move == Move::kForward) {
      if (!std::binary_search(d.lss.begin(), d.lss.end(), d.next))
        throw FrameworkError(policy.name() + ": forward move to " + problem.name(d.next) +
                             " outside the local search space");
      if (oracle.distance(top, d.next).is_infinite())
        throw FrameworkError(policy.name() + ": forward move to an unreachable state");
    }
    if (d.move == Move::kBackward && state.stack.size() < 2)
      throw FrameworkError(policy.name() + ": backward move at the start state");

    QuotaResult q = update_learning_amount(state.u, state.h, d, state.stack,
                                           problem.start(), params.accounting, params.quota);
    if (params.enforce_quota && q.exceeds_quota && d.move == Move::kForward && q.u > state.u) {
      d = backtracking_variant(d, state);
      q = update_learning_amount(state.u, state.h, d, state.stack, problem.start(),
                                 params.accounting, params.quota);
    }
    if (params.enforce_quota && q.exceeds_quota && d.move != Move::kForward &&
        params.accounting == AccountingMode::kAxiomExclusion) {
      d = strip_charged_updates(d, state, problem.start());
      q = update_learning_amount(state.u, state.h, d, state.stack, problem.start(),
                                 params.accounting, params.quota);
    }

    AgentState next;
    next.t = state.t + 1;
    next.h = state.h;
    StepRecord rec;
    if (limits.record_trace) {
      rec.t = state.t;
      rec.top = top;
      rec.stack_len = state.stack.size();
      rec.move = d.move;
      rec.excise = d.excise && d.move == Move::kForward && state.stack.contains(d.next);
      rec.gamma = d.gamma;
      rec.u_before = state.u;
      rec.lss = d.lss;
    }
    for (const HeuristicUpdate& up : d.updates) {
      problem.check_state(up.state);
      if (up.value == next.h[up.state]) continue;
      if (limits.record_trace) rec.changes.push_back({up.state, state.h[up.state], up.value});
      next.h.set(up.state, up.value);
    }
    next.u = q.u;
    next.stack = apply_move(state.stack, d);
    const StateId new_top = next.stack.top();
    if (d.move != Move::kStay) travel += oracle.distance(top, new_top);

    if (limits.record_trace) {
      rec.next_top = new_top;
      rec.u_after = next.u;
      result.trace.push_back(std::move(rec));
    }
    if (limits.audit) {
      auto v = audit_transition(ctx, state, next, d);
      result.audit.insert(result.audit.end(), v.begin(), v.end());
    }
    if (limits.observer) limits.observer(state, d, next);
    policy.observe(ctx, next, d);
    state = std::move(next);
  }

  result.reached_goal = problem.is_goal(state.stack.top());
  result.cycles = state.t;
  result.solution_cost = solution_cost(oracle, state.stack);
  result.travel_cost = travel;
  result.final_stack = std::move(state.stack);
  result.final_h = std::move(state.h);
  result.final_u = state.u;
  return result;
}

RunResult run_search(StepPolicy& policy, const ProblemSpec& problem,
                     const AlgoParams& params, const RunLimits& limits) {
  const DistanceOracle oracle(problem);
  return run_search(policy, oracle, params, limits);
}

}  // namespace rtbt
