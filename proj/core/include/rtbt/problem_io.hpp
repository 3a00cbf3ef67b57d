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
#include <string_view>

#include "rtbt/problem.hpp"

namespace rtbt {

/// Reads the line-oriented problem description format (see docs/formats.md).
ProblemSpec parse_problem_text(std::string_view text);
ProblemSpec load_problem(const std::string& path);

/// Writes a problem in the same format; parse_problem_text inverts it.
std::string format_problem_text(const ProblemSpec& problem);

}  // namespace rtbt
