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

#include <string>
#include <vector>

#include "rtbt/distance_oracle.hpp"
#include "rtbt/problem.hpp"

namespace rtbt {

enum class ProblemCondition {
  kGoalReachable,   // every state reaches a goal
  kFiniteDegree,    // finitely many actions per state
  kAdmissibleInit,  // h_init(s) <= theta * h*(s)
};

struct ProblemViolation {
  ProblemCondition condition;
  StateId state;
  std::string detail;
};

struct ValidationReport {
  std::vector<ProblemViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string(const ProblemSpec& problem) const;
};

ValidationReport validate_problem(const ProblemSpec& problem);
ValidationReport validate_problem(const DistanceOracle& oracle);

/// h <= theta * limit with a relative slack for the real-valued product.
bool within_weighted(Cost h, double theta, Cost limit);

}  // namespace rtbt
