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

#include "rtbt/run_config.hpp"

#include <cmath>

#include "rtbt/errors.hpp"
#include "rtbt/grid_map.hpp"
#include "rtbt/problem_io.hpp"

namespace rtbt {

void check_config(const RunConfig& c) {
  (void)parse_algorithm(c.algo);
  (void)parse_accounting_mode(c.accounting);
  (void)parse_heuristic_kind(c.heuristic);
  const int sources = int(c.map.has_value()) + int(c.problem.has_value()) + int(c.gen.has_value());
  if (sources == 0) throw ConfigError("no problem given: use --map, --problem or --gen");
  if (sources > 1) throw ConfigError("--map, --problem and --gen are mutually exclusive");
  if (c.gen) (void)parse_gen_kind(*c.gen);
  if (!(c.theta > 0.0) || !std::isfinite(c.theta)) throw ConfigError("theta must be positive");
  if (!(c.gamma_bar > 0.0)) throw ConfigError("gamma-bar must be positive");
  if (c.theta < c.gamma_bar) throw ConfigError("theta must be at least gamma-bar");
  if (c.dmax == 0) throw ConfigError("dmax must be at least 1");
  if (c.k == 0) throw ConfigError("k must be at least 1");
  if (std::isnan(c.quota)) throw ConfigError("quota is not a number");
  if (c.gen && c.size < 2) throw ConfigError("size must be at least 2");
}

AlgoParams to_params(const RunConfig& c, double epsilon) {
  AlgoParams p;
  p.theta = c.theta;
  p.gamma_bar = c.gamma_bar;
  p.gamma = c.gamma_bar;
  // u only takes multiples of epsilon, so rounding the quota down is exact
  if (c.quota < 0.0 || std::isinf(c.quota))
    p.quota = Cost::infinity();
  else
    p.quota = Cost(static_cast<Cost::Units>(std::floor(c.quota / epsilon + 1e-9)));
  p.d_max = c.dmax;
  p.segment_length = c.k;
  p.tie_seed = c.tie_seed;
  p.accounting = parse_accounting_mode(c.accounting);
  return p;
}

ProblemSpec load_configured_problem(const RunConfig& c) {
  if (c.map)
    return grid_to_problem(load_grid_map(*c.map), c.theta, parse_heuristic_kind(c.heuristic));
  if (c.problem) return load_problem(*c.problem).with_theta(c.theta);
  if (c.gen) {
    GenOptions opt;
    opt.kind = parse_gen_kind(*c.gen);
    opt.size = c.size;
    opt.seed = c.seed;
    opt.theta = c.theta;
    return gen_problem(opt);
  }
  throw ConfigError("no problem given");
}

}  // namespace rtbt
