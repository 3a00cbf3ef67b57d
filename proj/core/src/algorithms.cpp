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

#include "rtbt/algorithms.hpp"

#include <algorithm>

#include "rtbt/errors.hpp"
#include "rtbt/graph_queries.hpp"

namespace rtbt {

void TieBreaker::reset(const AlgoParams& params) {
  if (params.tie_seed)
    rng_.emplace(*params.tie_seed);
  else
    rng_.reset();
}

std::size_t TieBreaker::pick_min(const std::vector<StateId>& states,
                                 const std::vector<Cost>& values) {
  const Cost best = *std::min_element(values.begin(), values.end());
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == best) ties.push_back(i);
  if (!rng_) {
    return *std::min_element(ties.begin(), ties.end(), [&](std::size_t a, std::size_t b) {
      return states[a] < states[b];
    });
  }
  std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
  return ties[pick(*rng_)];
}

NeighbourScan scan_neighbours(const SearchContext& ctx, const AgentState& state,
                              double gamma, TieBreaker& ties) {
  const StateId top = state.stack.top();
  std::vector<StateId> succ;
  for (const Edge& e : ctx.problem.successors(top))
    if (e.to != top) succ.push_back(e.to);
  NeighbourScan scan;
  scan.lss = make_state_set(std::move(succ));
  if (scan.lss.empty())
    throw FrameworkError("state " + ctx.problem.name(top) + " has no successors");
  std::vector<Cost> f;
  f.reserve(scan.lss.size());
  for (StateId s : scan.lss) f.push_back(weighted(gamma, ctx.oracle.distance(top, s)) + state.h[s]);
  const std::size_t i = ties.pick_min(scan.lss, f);
  scan.best = scan.lss[i];
  scan.best_f = f[i];
  return scan;
}

namespace {

StepDecision forward_to(const NeighbourScan& scan, double gamma) {
  StepDecision d;
  d.move = Move::kForward;
  d.next = scan.best;
  d.lss = scan.lss;
  d.gamma = gamma;
  return d;
}

// SLA*-style decision: learn and retreat, or advance without learning.
StepDecision sla_decision(const NeighbourScan& scan, const AgentState& state, double gamma,
                          bool may_retreat) {
  const StateId top = state.stack.top();
  if (scan.best_f > state.h[top]) {
    StepDecision d;
    d.lss = scan.lss;
    d.gamma = gamma;
    d.updates.push_back({top, scan.best_f});
    d.move = may_retreat ? Move::kBackward : Move::kStay;
    return d;
  }
  return forward_to(scan, gamma);
}

}  // namespace

StepDecision LrtaPolicy::decide(const SearchContext& ctx, const AgentState& state) {
  const double gamma = ctx.params.gamma;
  const NeighbourScan scan = scan_neighbours(ctx, state, gamma, ties_);
  StepDecision d = forward_to(scan, gamma);
  const StateId top = state.stack.top();
  if (scan.best_f > state.h[top]) d.updates.push_back({top, scan.best_f});
  return d;
}

StepDecision SlaPolicy::decide(const SearchContext& ctx, const AgentState& state) {
  const double gamma = ctx.params.gamma;
  const NeighbourScan scan = scan_neighbours(ctx, state, gamma, ties_);
  return sla_decision(scan, state, gamma, state.stack.size() >= 2);
}

StepDecision SlatPolicy::decide(const SearchContext& ctx, const AgentState& state) {
  const double gamma = ctx.params.gamma;
  const NeighbourScan scan = scan_neighbours(ctx, state, gamma, ties_);
  const StateId top = state.stack.top();
  if (scan.best_f <= state.h[top]) return forward_to(scan, gamma);

  StepDecision learn_forward = forward_to(scan, gamma);
  learn_forward.updates.push_back({top, scan.best_f});
  const QuotaResult q =
      update_learning_amount(state.u, state.h, learn_forward, state.stack,
                             ctx.problem.start(), ctx.params.accounting, ctx.params.quota);
  if (!q.exceeds_quota) return learn_forward;
  return sla_decision(scan, state, gamma, state.stack.size() >= 2);
}

StepDecision DynamicLookaheadPolicy::decide(const SearchContext& ctx,
                                            const AgentState& state) {
  const DistanceOracle& oracle = ctx.oracle;
  const double gamma = ctx.params.gamma;
  const StateId sc = state.stack.top();
  const SourceRow& row = oracle.row(sc);
  auto f_from = [&](StateId from, StateId s) {
    return weighted(gamma, oracle.distance(from, s)) + state.h[s];
  };

  const std::uint32_t to_goal = oracle.goal_edge_distance(sc);
  if (to_goal == kUnreachableEdges)
    throw FrameworkError("no goal reachable from " + ctx.problem.name(sc));
  const std::uint32_t limit = std::min(ctx.params.d_max, to_goal);

  // grow the frontier until the current state is no longer a trap
  std::vector<StateSet> rings;
  for (std::uint32_t k = 1; k <= limit; ++k) {
    StateSet ring = frontier(oracle, sc, k);
    if (ring.empty())
      throw FrameworkError("frontier at depth " + std::to_string(k) + " from " +
                           ctx.problem.name(sc) + " is empty");
    Cost min_f = Cost::infinity();
    for (StateId s : ring) min_f = std::min(min_f, f_from(sc, s));
    rings.push_back(std::move(ring));
    if (state.h[sc] >= min_f) break;
  }
  last_depth_ = static_cast<std::uint32_t>(rings.size());

  StateSet gamma_set;
  for (const auto& ring : rings) gamma_set.insert(gamma_set.end(), ring.begin(), ring.end());
  gamma_set = make_state_set(std::move(gamma_set));

  std::vector<StateSet> family = rings;
  family.push_back(border(ctx.problem, gamma_set));

  // synchronous max-of-mins over the frontier family, all values from h_t
  std::vector<HeuristicUpdate> updates;
  std::vector<StateId> targets = gamma_set;
  targets.push_back(sc);
  HeuristicTable next_h = state.h;
  for (StateId s : targets) {
    Cost value = state.h[s];
    for (const StateSet& J : family) {
      if (J.empty() || std::binary_search(J.begin(), J.end(), s)) continue;
      if (!is_separating(oracle, s, J)) continue;
      Cost m = Cost::infinity();
      for (StateId x : J) m = std::min(m, f_from(s, x));
      if (m.is_finite()) value = std::max(value, m);
    }
    if (value > state.h[s]) next_h.set(s, value);
  }

  // best frontier state under the new values; h(sc) lifted to cover it
  const StateSet& last = rings.back();
  std::vector<Cost> f;
  for (StateId s : last) f.push_back(weighted(gamma, row.dist[s]) + next_h[s]);
  const std::size_t i = ties_.pick_min(last, f);
  if (f[i] > next_h[sc]) next_h.set(sc, f[i]);

  for (StateId s : targets)
    if (next_h[s] != state.h[s]) updates.push_back({s, next_h[s]});

  StepDecision d;
  d.move = Move::kForward;
  d.next = last[i];
  d.lss = std::move(gamma_set);
  d.gamma = gamma;
  d.updates = std::move(updates);
  return d;
}

StepDecision AcyclicPolicy::decide(const SearchContext& ctx, const AgentState& state) {
  StepDecision d = inner_->decide(ctx, state);
  if (d.move == Move::kForward && state.stack.contains(d.next)) d.excise = true;
  return d;
}

std::unique_ptr<StepPolicy> make_acyclic(std::unique_ptr<StepPolicy> policy) {
  return std::make_unique<AcyclicPolicy>(std::move(policy));
}

std::int64_t segment_discrepancy(const DistanceOracle& oracle, const StackPath& stack,
                                 const std::vector<std::size_t>& begins,
                                 const HeuristicTable& h) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < begins.size(); ++i) {
    const StateId b = stack.at(begins[i + 1]);
    const StateId e = stack.at(begins[i + 1] - 1);
    sum += h[b].units() - h[e].units() + oracle.distance(e, b).units();
  }
  return sum;
}

void PiecewisePolicy::reset(const SearchContext& ctx) {
  ties_.reset(ctx.params);
  seg_ = SegmentState{};
  seg_.k = ctx.params.segment_length;
}

StepDecision PiecewisePolicy::decide(const SearchContext& ctx, const AgentState& state) {
  const double gamma = ctx.params.gamma;
  const NeighbourScan scan = scan_neighbours(ctx, state, gamma, ties_);
  const std::size_t top_index = state.stack.size() - 1;
  return sla_decision(scan, state, gamma, top_index > seg_.current_begin());
}

void PiecewisePolicy::observe(const SearchContext& ctx, const AgentState& after,
                              const StepDecision& applied) {
  const std::size_t size = after.stack.size();
  while (seg_.begins.size() > 1 && seg_.begins.back() >= size) seg_.begins.pop_back();
  if (applied.move != Move::kForward || seg_.final_segment_started) return;
  const std::size_t top_index = size - 1;
  if (top_index - seg_.current_begin() + 1 <= seg_.k) return;
  seg_.begins.push_back(top_index);
  seg_.discrepancy_sum = segment_discrepancy(ctx.oracle, after.stack, seg_.begins, after.h);
  if (ctx.params.quota.is_finite() && seg_.discrepancy_sum > ctx.params.quota.units())
    seg_.final_segment_started = true;
}

std::string_view to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kLrta: return "lrta";
    case AlgorithmId::kSla: return "sla";
    case AlgorithmId::kSlat: return "slat";
    case AlgorithmId::kDynamicLookahead: return "dynlook";
    case AlgorithmId::kPiecewise: return "piecewise";
  }
  return "?";
}

AlgorithmId parse_algorithm(std::string_view text) {
  for (AlgorithmId id : {AlgorithmId::kLrta, AlgorithmId::kSla, AlgorithmId::kSlat,
                         AlgorithmId::kDynamicLookahead, AlgorithmId::kPiecewise})
    if (to_string(id) == text) return id;
  throw ConfigError("unknown algorithm '" + std::string(text) + "'");
}

std::unique_ptr<StepPolicy> make_policy(AlgorithmId id, bool acyclic) {
  std::unique_ptr<StepPolicy> p;
  switch (id) {
    case AlgorithmId::kLrta: p = std::make_unique<LrtaPolicy>(); break;
    case AlgorithmId::kSla: p = std::make_unique<SlaPolicy>(); break;
    case AlgorithmId::kSlat: p = std::make_unique<SlatPolicy>(); break;
    case AlgorithmId::kDynamicLookahead: p = std::make_unique<DynamicLookaheadPolicy>(); break;
    case AlgorithmId::kPiecewise: p = std::make_unique<PiecewisePolicy>(); break;
  }
  return acyclic ? make_acyclic(std::move(p)) : std::move(p);
}

}  // namespace rtbt
