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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtbt/framework.hpp"

namespace rtbt {

enum class TraceFormat { kCsv, kTable };

TraceFormat parse_trace_format(std::string_view text);

/// Largest problem the table format accepts.
inline constexpr std::size_t kMaxTableStates = 10;

std::string trace_csv_header();

/// CSV: one row per cycle after the header. Table: one row per time step
/// t = 0..cycles with every state's h, the stack, the local search space and
/// u. The table needs the initial heuristic and start, taken from problem.
/// Throws FormatError for tables over kMaxTableStates states.
std::string emit_trace(const ProblemSpec& problem, std::span<const StepRecord> trace,
                       TraceFormat format);

std::vector<StepRecord> parse_trace_csv(const ProblemSpec& problem, std::string_view text);

struct ReplayResult {
  std::vector<AuditViolation> violations;
  /// Inconsistencies between consecutive records (wrong top, wrong old h).
  std::vector<std::string> errors;
  AgentState final_state;
};

/// Rebuilds the agent state record by record and audits every transition.
ReplayResult replay_trace(const ProblemSpec& problem, const AlgoParams& params,
                          std::span<const StepRecord> trace);

}  // namespace rtbt
