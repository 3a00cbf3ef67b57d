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
#include <limits>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "rtbt/cost.hpp"
#include "rtbt/problem.hpp"

namespace rtbt {

inline constexpr std::uint32_t kUnreachableEdges =
    std::numeric_limits<std::uint32_t>::max();

/// Single-source shortest-path data: for every target, the distance and the
/// fewest edges among all minimum-cost paths.
struct SourceRow {
  std::vector<Cost> dist;
  std::vector<std::uint32_t> edges;
};

/// Exact distance oracle over a finite ProblemSpec. Rows are computed on
/// first use with Dijkstra (lexicographic on cost, then edge count) and
/// cached; the cache is guarded so one oracle can serve concurrent runs.
/// The problem must outlive the oracle.
class DistanceOracle {
 public:
  explicit DistanceOracle(const ProblemSpec& problem);

  const ProblemSpec& problem() const { return *problem_; }

  const SourceRow& row(StateId source) const;

  Cost distance(StateId a, StateId b) const;
  /// Fewest edges among shortest paths; kUnreachableEdges if none.
  std::uint32_t edge_distance(StateId a, StateId b) const;
  /// min over goals of edge_distance(s, g).
  std::uint32_t goal_edge_distance(StateId s) const;

  /// h*(s): distance to the closest goal.
  Cost goal_distance(StateId s) const;
  const std::vector<Cost>& goal_distances() const { return h_star_; }
  /// Largest finite h* over all states.
  Cost max_goal_distance() const;

 private:
  const ProblemSpec* problem_;
  std::vector<Cost> h_star_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<StateId, std::unique_ptr<const SourceRow>> rows_;
};

/// Free-function forms; each builds a throwaway oracle.
Cost shortest_path_cost(const ProblemSpec& problem, StateId a, StateId b);
Cost goal_distance(const ProblemSpec& problem, StateId s);
std::uint32_t edge_distance(const ProblemSpec& problem, StateId a, StateId b);

}  // namespace rtbt
