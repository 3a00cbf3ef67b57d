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

#include "rtbt/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "rtbt/distance_oracle.hpp"
#include "rtbt/errors.hpp"

namespace rtbt {

GenKind parse_gen_kind(std::string_view text) {
  if (text == "chain") return GenKind::kChain;
  if (text == "random") return GenKind::kRandom;
  throw ConfigError("unknown generator kind '" + std::string(text) + "'");
}

HeuristicKind parse_heuristic_kind(std::string_view text) {
  if (text == "zero") return HeuristicKind::kZero;
  if (text == "manhattan") return HeuristicKind::kManhattan;
  if (text == "exact") return HeuristicKind::kExact;
  if (text == "scaled") return HeuristicKind::kScaledExact;
  throw ConfigError("unknown heuristic kind '" + std::string(text) + "'");
}

namespace {

ProblemSpec chain_problem(std::size_t n, double theta) {
  // quantum 0.1, every edge weighs 1.0
  const Cost unit(10);
  ProblemBuilder b(0.1, theta);
  auto label = [n](std::size_t i) {
    return n <= 26 ? std::string(1, static_cast<char>('A' + i)) : "s" + std::to_string(i);
  };
  for (std::size_t i = 0; i < n; ++i) {
    Cost h;
    if (n == 2)
      h = Cost(static_cast<Cost::Units>(i) * 10);
    else if (i + 1 == n)
      h = Cost(7);
    else
      h = Cost(static_cast<Cost::Units>(std::min(i, n - 3)) * 10);
    b.add_state(label(i), h);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b.add_edge(label(i), label(i + 1), unit);
  }
  for (std::size_t i = n - 1; i > 0; --i) {
    b.add_edge(label(i), label(i - 1), unit);
  }
  b.add_goal(label(0));
  b.set_start(label(n >= 3 ? n - 2 : 1));
  return b.build();
}

}  // namespace

ProblemSpec chain4_problem() {
  ProblemBuilder b(0.1, 1.0);
  const Cost unit(10);
  b.add_state("A", Cost(0));
  b.add_state("B", Cost(10));
  b.add_state("C", Cost(10));
  b.add_state("D", Cost(7));
  // edge order as listed: (A,B), (B,C), (C,D), (D,C), (C,B), (B,A)
  b.add_edge("A", "B", unit);
  b.add_edge("B", "C", unit);
  b.add_edge("C", "D", unit);
  b.add_edge("D", "C", unit);
  b.add_edge("C", "B", unit);
  b.add_edge("B", "A", unit);
  b.add_goal("A");
  b.set_start("C");
  return b.build();
}

ProblemSpec gen_problem(const GenOptions& opt) {
  if (opt.size < 2) throw InputError("generated problems need at least two states");
  if (opt.kind == GenKind::kChain) {
    if (opt.size == 4) return chain4_problem().with_theta(opt.theta);
    return chain_problem(opt.size, opt.theta);
  }
  if (opt.weight_min < 1 || opt.weight_max < opt.weight_min)
    throw InputError("weight range must satisfy 1 <= min <= max");

  const std::size_t n = opt.size;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> weight(opt.weight_min, opt.weight_max);
  auto pick = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "s" + std::to_string(i);
  std::vector<std::vector<Edge>> succ(n);
  std::set<std::pair<std::size_t, std::size_t>> present;
  auto connect = [&](std::size_t a, std::size_t b) {
    if (a == b || !present.emplace(std::min(a, b), std::max(a, b)).second) return;
    const Cost w(weight(rng));
    succ[a].push_back({static_cast<StateId>(b), w});
    succ[b].push_back({static_cast<StateId>(a), w});
  };
  for (std::size_t i = 1; i < n; ++i) connect(i, pick(i));
  const auto extra =
      static_cast<std::size_t>(std::llround(opt.extra_edges_per_state * static_cast<double>(n)));
  for (std::size_t e = 0; e < extra; ++e) connect(pick(n), pick(n));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t goal_count = std::clamp<std::size_t>(opt.goals, 1, n - 1);
  std::vector<StateId> goals(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(goal_count));
  const auto start = static_cast<StateId>(order[goal_count]);

  ProblemSpec bare(names, succ, goals, start, std::vector<Cost>(n, Cost::zero()), opt.epsilon,
                   opt.theta);
  const DistanceOracle oracle(bare);
  std::uniform_real_distribution<double> lambda(std::clamp(opt.lambda_min, 0.0, 1.0), 1.0);
  std::vector<Cost> h(n);
  for (StateId s = 0; s < n; ++s) {
    const double scale = lambda(rng);
    const double hstar = static_cast<double>(oracle.goal_distance(s).units());
    const double cap = opt.theta * hstar;
    auto v = static_cast<Cost::Units>(std::floor(scale * cap + 1e-9));
    if (opt.positive_nongoal_h && !bare.is_goal(s) && v == 0 && cap >= 1.0) v = 1;
    h[s] = Cost(v);
  }
  return bare.with_h_init(std::move(h));
}

}  // namespace rtbt
