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

#include "rtbt/graph_queries.hpp"

#include <algorithm>

namespace rtbt {

StateSet make_state_set(std::vector<StateId> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

bool is_separating(const DistanceOracle& oracle, StateId s,
                   std::span<const StateId> candidate) {
  const ProblemSpec& problem = oracle.problem();
  const std::size_t n = problem.size();
  std::vector<char> blocked(n, 0);
  for (StateId c : candidate) {
    problem.check_state(c);
    blocked[c] = 1;
  }
  if (blocked[s]) return true;
  const SourceRow& row = oracle.row(s);
  // walk the tight-edge DAG from s, avoiding candidate states
  std::vector<char> seen(n, 0);
  std::vector<StateId> work{s};
  seen[s] = 1;
  while (!work.empty()) {
    const StateId u = work.back();
    work.pop_back();
    if (problem.is_goal(u)) return false;
    for (const Edge& e : problem.successors(u)) {
      if (seen[e.to] || blocked[e.to]) continue;
      if (row.dist[u] + e.weight != row.dist[e.to]) continue;
      seen[e.to] = 1;
      work.push_back(e.to);
    }
  }
  return true;
}

StateSet border(const ProblemSpec& problem, std::span<const StateId> gamma) {
  std::vector<char> inside(problem.size(), 0);
  for (StateId s : gamma) {
    problem.check_state(s);
    inside[s] = 1;
  }
  StateSet out;
  for (StateId s : gamma) {
    const auto succ = problem.successors(s);
    if (std::any_of(succ.begin(), succ.end(), [&](const Edge& e) { return !inside[e.to]; }))
      out.push_back(s);
  }
  return make_state_set(std::move(out));
}

StateSet frontier(const DistanceOracle& oracle, StateId s, std::uint32_t k) {
  const SourceRow& row = oracle.row(s);
  StateSet out;
  for (StateId t = 0; t < row.edges.size(); ++t)
    if (row.edges[t] == k) out.push_back(t);
  return out;
}

}  // namespace rtbt
