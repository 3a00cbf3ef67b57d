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

#include "rtbt/distance_oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <queue>
#include <tuple>

namespace rtbt {
namespace {

struct Label {
  Cost cost;
  std::uint32_t edges;
  StateId state;
  bool operator>(const Label& o) const {
    return std::tie(cost, edges, state) > std::tie(o.cost, o.edges, o.state);
  }
};

using MinQueue = std::priority_queue<Label, std::vector<Label>, std::greater<>>;

SourceRow dijkstra_forward(const ProblemSpec& problem, StateId source) {
  const std::size_t n = problem.size();
  SourceRow row{std::vector<Cost>(n, Cost::infinity()),
                std::vector<std::uint32_t>(n, kUnreachableEdges)};
  MinQueue open;
  row.dist[source] = Cost::zero();
  row.edges[source] = 0;
  open.push({Cost::zero(), 0, source});
  while (!open.empty()) {
    const Label top = open.top();
    open.pop();
    if (top.cost != row.dist[top.state] || top.edges != row.edges[top.state]) continue;
    for (const Edge& e : problem.successors(top.state)) {
      const Cost c = top.cost + e.weight;
      const std::uint32_t k = top.edges + 1;
      if (c < row.dist[e.to] || (c == row.dist[e.to] && k < row.edges[e.to])) {
        row.dist[e.to] = c;
        row.edges[e.to] = k;
        open.push({c, k, e.to});
      }
    }
  }
  return row;
}

std::vector<Cost> goal_distances_of(const ProblemSpec& problem) {
  std::vector<Cost> dist(problem.size(), Cost::infinity());
  MinQueue open;
  for (StateId g : problem.goals()) {
    dist[g] = Cost::zero();
    open.push({Cost::zero(), 0, g});
  }
  while (!open.empty()) {
    const Label top = open.top();
    open.pop();
    if (top.cost != dist[top.state]) continue;
    for (const Edge& e : problem.predecessors(top.state)) {
      const Cost c = top.cost + e.weight;
      if (c < dist[e.to]) {
        dist[e.to] = c;
        open.push({c, 0, e.to});
      }
    }
  }
  return dist;
}

}  // namespace

DistanceOracle::DistanceOracle(const ProblemSpec& problem)
    : problem_(&problem), h_star_(goal_distances_of(problem)) {}

const SourceRow& DistanceOracle::row(StateId source) const {
  problem_->check_state(source);
  {
    std::shared_lock lock(mutex_);
    auto it = rows_.find(source);
    if (it != rows_.end()) return *it->second;
  }
  auto fresh = std::make_unique<const SourceRow>(dijkstra_forward(*problem_, source));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = rows_.emplace(source, std::move(fresh));
  return *it->second;
}

Cost DistanceOracle::distance(StateId a, StateId b) const {
  problem_->check_state(b);
  return row(a).dist[b];
}

std::uint32_t DistanceOracle::edge_distance(StateId a, StateId b) const {
  problem_->check_state(b);
  return row(a).edges[b];
}

std::uint32_t DistanceOracle::goal_edge_distance(StateId s) const {
  const SourceRow& r = row(s);
  std::uint32_t best = kUnreachableEdges;
  for (StateId g : problem_->goals()) best = std::min(best, r.edges[g]);
  return best;
}

Cost DistanceOracle::goal_distance(StateId s) const {
  problem_->check_state(s);
  return h_star_[s];
}

Cost DistanceOracle::max_goal_distance() const {
  Cost best = Cost::zero();
  for (Cost c : h_star_)
    if (c.is_finite()) best = std::max(best, c);
  return best;
}

Cost shortest_path_cost(const ProblemSpec& problem, StateId a, StateId b) {
  return DistanceOracle(problem).distance(a, b);
}

Cost goal_distance(const ProblemSpec& problem, StateId s) {
  return DistanceOracle(problem).goal_distance(s);
}

std::uint32_t edge_distance(const ProblemSpec& problem, StateId a, StateId b) {
  return DistanceOracle(problem).edge_distance(a, b);
}

}  // namespace rtbt
