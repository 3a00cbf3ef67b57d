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

#include "rtbt/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rtbt/errors.hpp"
#include "rtbt/validation.hpp"

namespace rtbt {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

double units(Cost c) {
  return c.is_infinite() ? kPosInf : static_cast<double>(c.units());
}

}  // namespace

void VisitedUnion::add(StateId s) {
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) states_.insert(it, s);
}

void VisitedUnion::add(std::span<const StateId> states) {
  for (StateId s : states) add(s);
}

bool VisitedUnion::contains(StateId s) const {
  return std::binary_search(states_.begin(), states_.end(), s);
}

double raised_heuristic(const DistanceOracle& oracle, const HeuristicTable& h,
                        std::span<const StateId> gamma, StateId s, double theta) {
  double best = units(h[s]);
  for (StateId x : gamma) {
    const Cost d = oracle.distance(x, s);
    if (d.is_infinite()) continue;
    best = std::max(best, units(h[x]) - theta * units(d));
  }
  return best;
}

UpdateBound max_update_bound(const DistanceOracle& oracle, const HeuristicTable& h,
                             const VisitedUnion& visited, StateId s, double theta,
                             std::size_t cap, bool allow_approximation) {
  const StateSet& members = visited.states();
  if (!visited.contains(s)) throw InputError("state is not in the visited union");

  // theta * dist(s, x) + raised h(x), for every member x
  std::vector<double> term(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Cost d = oracle.distance(s, members[i]);
    term[i] = d.is_infinite()
                  ? kPosInf
                  : theta * units(d) + raised_heuristic(oracle, h, members, members[i], theta);
  }

  UpdateBound bound;
  bound.value = raised_heuristic(oracle, h, members, s, theta);  // J = {s}

  if (members.size() <= cap) {
    bound.mode = BoundMode::kExact;
    const std::size_t n = members.size();
    const std::size_t full = std::size_t{1} << n;
    std::vector<double> min_term(full, kPosInf);
    std::vector<StateId> subset;
    for (std::size_t mask = 1; mask < full; ++mask) {
      const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
      min_term[mask] = std::min(min_term[mask & (mask - 1)], term[low]);
      if (!(min_term[mask] > bound.value) || std::isinf(min_term[mask])) continue;
      subset.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) subset.push_back(members[i]);
      if (is_separating(oracle, s, subset)) bound.value = min_term[mask];
    }
    return bound;
  }
  if (!allow_approximation)
    throw SizeError("visited union of " + std::to_string(members.size()) +
                    " states exceeds the brute-force cap of " + std::to_string(cap));

  bound.mode = BoundMode::kFrontierApproximation;
  std::vector<StateSet> family;
  const SourceRow& row = oracle.row(s);
  std::uint32_t deepest = 0;
  for (StateId x : members)
    if (row.edges[x] != kUnreachableEdges) deepest = std::max(deepest, row.edges[x]);
  for (std::uint32_t k = 1; k <= deepest; ++k) {
    StateSet ring;
    for (StateId x : members)
      if (row.edges[x] == k) ring.push_back(x);
    if (!ring.empty()) family.push_back(std::move(ring));
  }
  family.push_back(border(oracle.problem(), members));
  for (const StateSet& J : family) {
    if (J.empty() || !is_separating(oracle, s, J)) continue;
    double m = kPosInf;
    for (StateId x : J) {
      const auto i = static_cast<std::size_t>(
          std::lower_bound(members.begin(), members.end(), x) - members.begin());
      m = std::min(m, term[i]);
    }
    if (std::isfinite(m)) bound.value = std::max(bound.value, m);
  }
  return bound;
}

Cost max_of_mins_value(const DistanceOracle& oracle, const HeuristicTable& h,
                       std::span<const StateId> gamma, StateId s, double gamma_weight,
                       std::size_t cap) {
  const StateSet members = make_state_set({gamma.begin(), gamma.end()});
  if (members.size() > cap)
    throw SizeError("local search space exceeds the brute-force cap");
  const std::size_t n = members.size();
  std::vector<Cost> f(n);
  for (std::size_t i = 0; i < n; ++i)
    f[i] = weighted(gamma_weight, oracle.distance(s, members[i])) + h[members[i]];
  Cost best = h[s];
  const std::size_t full = std::size_t{1} << n;
  std::vector<Cost> min_f(full, Cost::infinity());
  std::vector<StateId> subset;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    min_f[mask] = std::min(min_f[mask & (mask - 1)], f[low]);
    if (min_f[mask] <= best || min_f[mask].is_infinite()) continue;
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) subset.push_back(members[i]);
    if (is_separating(oracle, s, subset)) best = min_f[mask];
  }
  return best;
}

AdmissibilityCheck check_theta_admissible(const DistanceOracle& oracle,
                                          const HeuristicTable& h, double theta) {
  for (StateId s = 0; s < h.size(); ++s)
    if (!within_weighted(h[s], theta, oracle.goal_distance(s))) return {false, s};
  return {true, std::nullopt};
}

bool RuleVerdict::criterion_consistent() const {
  return std::all_of(findings.begin(), findings.end(), [](const RuleFinding& f) {
    return f.exceeded_bound > 0 || f.broke_admissibility == 0;
  });
}

std::uint64_t RuleVerdict::total_exceeded() const {
  std::uint64_t n = 0;
  for (const auto& f : findings) n += f.exceeded_bound;
  return n;
}

std::uint64_t RuleVerdict::total_broken() const {
  std::uint64_t n = 0;
  for (const auto& f : findings) n += f.broke_admissibility;
  return n;
}

RuleVerdict verify_update_rule(const PolicyFactory& rule,
                               std::span<const NamedProblem> problems,
                               const AlgoParams& params, std::size_t cap) {
  RuleVerdict verdict;
  for (const NamedProblem& np : problems) {
    const ProblemSpec& problem = *np.problem;
    const DistanceOracle oracle(problem);
    RuleFinding finding;
    finding.problem_id = np.id;
    VisitedUnion visited;
    bool checking = true;

    RunLimits limits;
    limits.record_trace = false;
    limits.observer = [&](const AgentState& before, const StepDecision& d,
                          const AgentState& after) {
      if (!checking) return;
      visited.add(d.lss);
      visited.add(before.stack.top());
      const bool touches_goal = std::any_of(
          visited.states().begin(), visited.states().end(),
          [&](StateId s) { return problem.is_goal(s); });
      if (touches_goal) {
        checking = false;
        finding.goal_contact = before.t;
        return;
      }
      ++finding.cycles_checked;
      for (StateId s = 0; s < problem.size(); ++s) {
        if (after.h[s] == before.h[s]) continue;
        ++finding.updates_checked;
        const UpdateBound b = max_update_bound(oracle, before.h, visited, s, params.theta, cap);
        if (b.mode == BoundMode::kFrontierApproximation) finding.approximate_bounds_used = true;
        if (static_cast<double>(after.h[s].units()) > b.value + 1e-9) ++finding.exceeded_bound;
        if (!within_weighted(after.h[s], params.theta, oracle.goal_distance(s)))
          ++finding.broke_admissibility;
      }
    };
    auto policy = rule();
    run_search(*policy, oracle, params, limits);
    verdict.findings.push_back(std::move(finding));
  }
  return verdict;
}

}  // namespace rtbt
