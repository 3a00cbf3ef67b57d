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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rtbt/cost.hpp"

namespace rtbt {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

struct Edge {
  StateId to;
  Cost weight;
};

/// A finite heuristic search problem: weighted digraph, goal set, start
/// state, initial heuristic, cost quantum and admissibility weight.
///
/// All weights and heuristic values are held in quantum units. Weights are
/// at least one quantum; heuristic values are non-negative. The object is
/// immutable after construction and safe to share between threads.
class ProblemSpec {
 public:
  ProblemSpec(std::vector<std::string> names,
              std::vector<std::vector<Edge>> successors,
              std::vector<StateId> goals, StateId start,
              std::vector<Cost> h_init, double epsilon, double theta);

  std::size_t size() const { return names_.size(); }
  const std::string& name(StateId s) const;
  std::optional<StateId> find(std::string_view name) const;
  /// Like find() but throws InputError for unknown names.
  StateId id(std::string_view name) const;

  std::span<const Edge> successors(StateId s) const;
  std::span<const Edge> predecessors(StateId s) const;
  std::size_t edge_count() const { return edge_count_; }

  bool is_goal(StateId s) const;
  const std::vector<StateId>& goals() const { return goals_; }
  StateId start() const { return start_; }
  const std::vector<Cost>& h_init() const { return h_init_; }
  double epsilon() const { return epsilon_; }
  double theta() const { return theta_; }

  /// Throws InputError unless s names a state of this problem.
  void check_state(StateId s) const;

  /// Same graph and heuristic with a different admissibility weight.
  ProblemSpec with_theta(double theta) const;
  ProblemSpec with_h_init(std::vector<Cost> h_init) const;
  ProblemSpec with_start(StateId start) const;

  bool operator==(const ProblemSpec& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> by_name_;
  std::vector<std::vector<Edge>> successors_;
  std::vector<std::vector<Edge>> predecessors_;
  std::vector<StateId> goals_;
  std::vector<bool> goal_mask_;
  StateId start_;
  std::vector<Cost> h_init_;
  double epsilon_;
  double theta_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction of a ProblemSpec by state name.
class ProblemBuilder {
 public:
  explicit ProblemBuilder(double epsilon = 1.0, double theta = 1.0)
      : epsilon_(epsilon), theta_(theta) {}

  /// Adds a state (or updates its heuristic) and returns its id.
  StateId add_state(const std::string& name, Cost h = Cost::zero());
  /// Directed edge; both endpoints are created on demand.
  void add_edge(const std::string& from, const std::string& to, Cost weight);
  /// Pair of opposite directed edges with the same weight.
  void add_undirected_edge(const std::string& a, const std::string& b, Cost weight);
  void add_goal(const std::string& name);
  void set_start(const std::string& name);
  void set_h(const std::string& name, Cost h);
  void set_theta(double theta) { theta_ = theta; }

  ProblemSpec build() const;

 private:
  StateId ensure(const std::string& name);

  double epsilon_;
  double theta_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> ids_;
  std::vector<std::vector<Edge>> successors_;
  std::vector<Cost> h_;
  std::vector<StateId> goals_;
  std::optional<StateId> start_;
};

}  // namespace rtbt
