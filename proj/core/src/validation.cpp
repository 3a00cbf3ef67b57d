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

#include "rtbt/validation.hpp"

#include <sstream>

namespace rtbt {

bool within_weighted(Cost h, double theta, Cost limit) {
  if (limit.is_infinite()) return true;
  const double rhs = theta * static_cast<double>(limit.units());
  return static_cast<double>(h.units()) <= rhs + 1e-9 * std::max(1.0, rhs);
}

ValidationReport validate_problem(const DistanceOracle& oracle) {
  const ProblemSpec& problem = oracle.problem();
  ValidationReport report;
  for (StateId s = 0; s < problem.size(); ++s) {
    const Cost hstar = oracle.goal_distance(s);
    if (hstar.is_infinite()) {
      report.violations.push_back(
          {ProblemCondition::kGoalReachable, s, "no goal reachable from " + problem.name(s)});
      continue;
    }
    // Adjacency lists are finite by construction; the degree condition
    // cannot fail for an in-memory problem.
    const Cost h = problem.h_init()[s];
    if (!within_weighted(h, problem.theta(), hstar)) {
      std::ostringstream msg;
      msg << "h_init(" << problem.name(s) << ") = " << format_cost(h, problem.epsilon())
          << " exceeds theta * h* = " << problem.theta() << " * "
          << format_cost(hstar, problem.epsilon());
      report.violations.push_back({ProblemCondition::kAdmissibleInit, s, msg.str()});
    }
  }
  return report;
}

ValidationReport validate_problem(const ProblemSpec& problem) {
  return validate_problem(DistanceOracle(problem));
}

std::string ValidationReport::to_string(const ProblemSpec&) const {
  std::ostringstream out;
  for (const auto& v : violations) {
    switch (v.condition) {
      case ProblemCondition::kGoalReachable: out << "goal-reachability: "; break;
      case ProblemCondition::kFiniteDegree: out << "finite-degree: "; break;
      case ProblemCondition::kAdmissibleInit: out << "admissibility: "; break;
    }
    out << v.detail << '\n';
  }
  return out.str();
}

}  // namespace rtbt
