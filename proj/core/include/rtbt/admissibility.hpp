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

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtbt/framework.hpp"
#include "rtbt/graph_queries.hpp"

// Learning-rule admissibility machinery. All returned values are in quantum
// units of the problem; they are real-valued because theta need not be an
// integer.

namespace rtbt {

/// Cumulative union of every local search space seen so far in a run, with
/// the planning state of each cycle included.
class VisitedUnion {
 public:
  void add(StateId s);
  void add(std::span<const StateId> states);
  bool contains(StateId s) const;
  const StateSet& states() const { return states_; }
  std::size_t size() const { return states_.size(); }

 private:
  StateSet states_;
};

/// max(h(s), max over s' in gamma of h(s') - theta * dist(s', s)).
/// Unreachable s' are ignored.
double raised_heuristic(const DistanceOracle& oracle, const HeuristicTable& h,
                        std::span<const StateId> gamma, StateId s, double theta);

enum class BoundMode { kExact, kFrontierApproximation };

struct UpdateBound {
  double value = 0.0;
  BoundMode mode = BoundMode::kExact;
};

inline constexpr std::size_t kDefaultBruteForceCap = 12;

/// Largest value h(s) may be raised to under the strengthened max-of-min
/// condition over the visited union: the max over separating subsets J of
/// the union (plus {s}) of min over s' in J of theta * dist(s, s') + raised
/// h(s'). Exhaustive over subsets when the union has at most `cap` states.
/// Above the cap, `allow_approximation` selects the nested-frontier family
/// (a lower bound on the exact value); otherwise SizeError is thrown.
UpdateBound max_update_bound(const DistanceOracle& oracle, const HeuristicTable& h,
                             const VisitedUnion& visited, StateId s, double theta,
                             std::size_t cap = kDefaultBruteForceCap,
                             bool allow_approximation = true);

/// The max-of-mins value over a local search space: max(h(s), max over
/// separating subsets J of gamma of min over J of gamma_w * dist(s,s') + h(s')).
/// Exhaustive; gamma must have at most `cap` states.
Cost max_of_mins_value(const DistanceOracle& oracle, const HeuristicTable& h,
                       std::span<const StateId> gamma, StateId s, double gamma_weight,
                       std::size_t cap = kDefaultBruteForceCap);

struct AdmissibilityCheck {
  bool admissible = true;
  std::optional<StateId> witness;
};

AdmissibilityCheck check_theta_admissible(const DistanceOracle& oracle,
                                          const HeuristicTable& h, double theta);

struct RuleFinding {
  std::string problem_id;
  std::uint64_t cycles_checked = 0;
  std::uint64_t updates_checked = 0;
  std::uint64_t exceeded_bound = 0;
  std::uint64_t broke_admissibility = 0;
  /// Cycle at which the visited union first contained a goal, if it did.
  std::optional<std::uint64_t> goal_contact;
  bool approximate_bounds_used = false;
};

struct RuleVerdict {
  std::vector<RuleFinding> findings;
  /// Never exceeding the bound on a problem implies never breaking
  /// admissibility there.
  bool criterion_consistent() const;
  std::uint64_t total_exceeded() const;
  std::uint64_t total_broken() const;
};

struct NamedProblem {
  std::string id;
  std::shared_ptr<const ProblemSpec> problem;
};

using PolicyFactory = std::function<std::unique_ptr<StepPolicy>()>;

/// Runs the rule (the policy's learning step) on every problem and compares
/// each heuristic update with max_update_bound, for as long as the visited
/// union stays free of goals.
RuleVerdict verify_update_rule(const PolicyFactory& rule,
                               std::span<const NamedProblem> problems,
                               const AlgoParams& params,
                               std::size_t cap = kDefaultBruteForceCap);

}  // namespace rtbt
