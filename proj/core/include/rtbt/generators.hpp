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
#include <string>
#include <string_view>
#include <vector>

#include "rtbt/problem.hpp"

namespace rtbt {

enum class GenKind { kChain, kRandom };

GenKind parse_gen_kind(std::string_view text);

enum class HeuristicKind { kZero, kManhattan, kExact, kScaledExact };

HeuristicKind parse_heuristic_kind(std::string_view text);

struct GenOptions {
  GenKind kind = GenKind::kRandom;
  std::size_t size = 16;
  std::uint64_t seed = 1;
  /// Edge weights drawn uniformly from [weight_min, weight_max] quanta.
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 5;
  double theta = 1.0;
  double epsilon = 1.0;
  /// Extra undirected edges beyond the spanning tree, per state.
  double extra_edges_per_state = 1.0;
  std::size_t goals = 1;
  /// h_init(s) = floor(lambda_s * theta * h*(s)), lambda_s uniform in
  /// [lambda_min, 1].
  double lambda_min = 0.0;
  /// Raise non-goal heuristic values of zero to one quantum.
  bool positive_nongoal_h = false;
};

/// The fixed four-state chain A-B-C-D: unit weights with quantum 0.1, goal
/// A, start C, h_init = (0, 1, 1, 0.7), theta 1.
ProblemSpec chain4_problem();

/// Chain problems reproduce chain4_problem() at size 4. Random problems
/// are connected with symmetric edges, so every state reaches a goal, and
/// their initial heuristic is theta-admissible by construction.
ProblemSpec gen_problem(const GenOptions& options);

}  // namespace rtbt
