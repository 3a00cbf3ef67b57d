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

#include "rtbt/grid_map.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rtbt/distance_oracle.hpp"
#include "rtbt/errors.hpp"

namespace rtbt {

std::size_t GridMap::free_cells() const {
  return static_cast<std::size_t>(std::count(blocked.begin(), blocked.end(), false));
}

GridMap parse_grid_map(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string row(text.substr(pos, end - pos));
    if (!row.empty() && row.back() == '\r') row.pop_back();
    rows.push_back(std::move(row));
    pos = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw ParseError("empty map", 1, 1);

  GridMap map;
  map.width = rows.front().size();
  map.height = rows.size();
  if (map.width == 0) throw ParseError("empty row", 1, 1);
  map.blocked.assign(map.width * map.height, false);
  bool have_start = false;
  for (std::size_t y = 0; y < rows.size(); ++y) {
    const std::string& row = rows[y];
    if (row.size() != map.width)
      throw ParseError("row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(map.width),
                       y + 1, std::min(row.size(), map.width) + 1);
    for (std::size_t x = 0; x < row.size(); ++x) {
      const std::size_t i = map.index(x, y);
      switch (row[x]) {
        case '#': map.blocked[i] = true; break;
        case '.': break;
        case 'S':
          if (have_start) throw ParseError("second start cell", y + 1, x + 1);
          have_start = true;
          map.start = i;
          break;
        case 'G': map.goals.push_back(i); break;
        default:
          throw ParseError(std::string("unknown glyph '") + row[x] + "'", y + 1, x + 1);
      }
    }
  }
  if (!have_start) throw ParseError("map has no start cell 'S'", map.height, 1);
  if (map.goals.empty()) throw ParseError("map has no goal cell 'G'", map.height, 1);
  return map;
}

GridMap load_grid_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open map file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grid_map(buf.str());
}

std::string cell_name(std::size_t x, std::size_t y) {
  return std::to_string(x) + "_" + std::to_string(y);
}

ProblemSpec grid_to_problem(const GridMap& map, double theta, HeuristicKind h0) {
  if (h0 == HeuristicKind::kScaledExact)
    throw ConfigError("grid maps support zero, manhattan or exact heuristics");
  const std::size_t cells = map.width * map.height;
  auto neighbours = [&](std::size_t i) {
    std::vector<std::size_t> out;
    const std::size_t x = map.x_of(i), y = map.y_of(i);
    if (x > 0) out.push_back(i - 1);
    if (x + 1 < map.width) out.push_back(i + 1);
    if (y > 0) out.push_back(i - map.width);
    if (y + 1 < map.height) out.push_back(i + map.width);
    std::erase_if(out, [&](std::size_t j) { return map.blocked[j]; });
    return out;
  };

  // component of the start cell
  std::vector<char> reached(cells, 0);
  std::vector<std::size_t> work{map.start};
  reached[map.start] = 1;
  while (!work.empty()) {
    const std::size_t i = work.back();
    work.pop_back();
    for (std::size_t j : neighbours(i))
      if (!reached[j]) {
        reached[j] = 1;
        work.push_back(j);
      }
  }
  std::vector<StateId> id_of(cells, kNoState);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cells; ++i)
    if (reached[i]) {
      id_of[i] = static_cast<StateId>(names.size());
      names.push_back(cell_name(map.x_of(i), map.y_of(i)));
    }
  std::vector<StateId> goals;
  for (std::size_t g : map.goals)
    if (reached[g]) goals.push_back(id_of[g]);
  if (goals.empty()) throw InputError("no goal cell is connected to the start");

  std::vector<std::vector<Edge>> succ(names.size());
  for (std::size_t i = 0; i < cells; ++i) {
    if (!reached[i]) continue;
    for (std::size_t j : neighbours(i)) succ[id_of[i]].push_back({id_of[j], Cost(1)});
  }

  std::vector<Cost> h(names.size(), Cost::zero());
  ProblemSpec bare(names, succ, goals, id_of[map.start], h, 1.0, theta);
  if (h0 == HeuristicKind::kZero) return bare;
  if (h0 == HeuristicKind::kExact) return bare.with_h_init(DistanceOracle(bare).goal_distances());
  for (std::size_t i = 0; i < cells; ++i) {
    if (!reached[i]) continue;
    std::int64_t best = -1;
    for (std::size_t g : map.goals) {
      if (!reached[g]) continue;
      const auto dx = std::llabs(static_cast<long long>(map.x_of(i)) -
                                 static_cast<long long>(map.x_of(g)));
      const auto dy = std::llabs(static_cast<long long>(map.y_of(i)) -
                                 static_cast<long long>(map.y_of(g)));
      if (best < 0 || dx + dy < best) best = dx + dy;
    }
    h[id_of[i]] = Cost(best);
  }
  return bare.with_h_init(std::move(h));
}

}  // namespace rtbt
