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

#include <span>
#include <vector>

#include "rtbt/distance_oracle.hpp"
#include "rtbt/problem.hpp"

namespace rtbt {

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<StateId>;

StateSet make_state_set(std::vector<StateId> states);

/// True iff every shortest path from s to every reachable goal passes
/// through a member of candidate. Tested on the shortest-path DAG rooted at
/// s: the set separates iff no goal is reachable over tight edges once the
/// candidate states are removed. A goal s is separated only by a candidate
/// containing s.
bool is_separating(const DistanceOracle& oracle, StateId s,
                   std::span<const StateId> candidate);

/// Members of gamma with at least one out-edge leaving gamma.
StateSet border(const ProblemSpec& problem, std::span<const StateId> gamma);

/// States at edge-distance exactly k from s.
StateSet frontier(const DistanceOracle& oracle, StateId s, std::uint32_t k);

}  // namespace rtbt
