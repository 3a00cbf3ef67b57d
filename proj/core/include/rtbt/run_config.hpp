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
#include <string>

#include "rtbt/algorithms.hpp"
#include "rtbt/framework.hpp"
#include "rtbt/generators.hpp"

namespace rtbt {

/// Everything a single CLI invocation needs. Mirrors the flat key/value
/// configuration file and the command-line flags of the same names.
struct RunConfig {
  std::string algo = "lrta";
  bool acyclic = false;
  double theta = 1.0;
  /// Quota in real units; negative means infinity.
  double quota = -1.0;
  double gamma_bar = 1.0;
  std::uint32_t dmax = 1;
  std::uint32_t k = 1;
  std::optional<std::uint64_t> tie_seed;
  std::string accounting = "total";
  bool audit = true;
  std::uint64_t budget = 0;
  std::optional<std::string> out;

  // problem source: exactly one of map, problem file or generator
  std::optional<std::string> map;
  std::optional<std::string> problem;
  std::optional<std::string> gen;
  std::size_t size = 16;
  std::uint64_t seed = 1;
  std::string heuristic = "manhattan";
};

/// Throws ConfigError on unknown names or inconsistent parameters
/// (theta < gamma_bar, k == 0, dmax == 0, several problem sources).
void check_config(const RunConfig& config);

AlgoParams to_params(const RunConfig& config, double epsilon);

/// Loads or generates the problem selected by the config.
ProblemSpec load_configured_problem(const RunConfig& config);

}  // namespace rtbt
