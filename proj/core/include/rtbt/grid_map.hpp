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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rtbt/generators.hpp"
#include "rtbt/problem.hpp"

namespace rtbt {

/// Rectangular 4-connected gridworld with unit moves. Cells are indexed
/// row-major: index = y * width + x.
struct GridMap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<bool> blocked;
  std::size_t start = 0;
  std::vector<std::size_t> goals;

  std::size_t index(std::size_t x, std::size_t y) const { return y * width + x; }
  std::size_t x_of(std::size_t i) const { return i % width; }
  std::size_t y_of(std::size_t i) const { return i / width; }
  std::size_t free_cells() const;
};

/// '#' blocked, '.' free, 'S' start (exactly one), 'G' goal (at least one).
/// Rows must have equal length. Throws ParseError with line and column.
GridMap parse_grid_map(std::string_view text);
GridMap load_grid_map(const std::string& path);

/// State name of a cell, "x_y".
std::string cell_name(std::size_t x, std::size_t y);

/// Problem over the free cells connected to the start. kScaledExact is not
/// accepted here. Throws InputError when no goal is connected to the start.
ProblemSpec grid_to_problem(const GridMap& map, double theta, HeuristicKind h0);

}  // namespace rtbt
