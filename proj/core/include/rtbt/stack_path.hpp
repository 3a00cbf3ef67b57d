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

#include <optional>
#include <span>
#include <vector>

#include "rtbt/cost.hpp"
#include "rtbt/problem.hpp"

namespace rtbt {

/// Path from the start state to the current state; only planning states are
/// stored. The bottom element is the start state for the lifetime of a run.
class StackPath {
 public:
  StackPath() = default;
  explicit StackPath(StateId start) : states_{start} {}
  explicit StackPath(std::vector<StateId> states) : states_(std::move(states)) {}

  bool empty() const { return states_.empty(); }
  std::size_t size() const { return states_.size(); }
  StateId top() const { return states_.back(); }
  StateId bottom() const { return states_.front(); }
  StateId at(std::size_t i) const { return states_.at(i); }
  /// State directly below the top; requires size() >= 2.
  StateId below_top() const { return states_[states_.size() - 2]; }

  void push(StateId s) { states_.push_back(s); }
  void pop() { states_.pop_back(); }
  /// Keeps the first n elements.
  void truncate(std::size_t n) { states_.resize(n); }

  std::optional<std::size_t> index_of(StateId s) const;
  bool contains(StateId s) const { return index_of(s).has_value(); }
  bool has_duplicates() const;

  std::span<const StateId> states() const { return states_; }

  bool operator==(const StackPath&) const = default;

 private:
  std::vector<StateId> states_;
};

/// Current heuristic estimate per state, in quantum units.
class HeuristicTable {
 public:
  HeuristicTable() = default;
  explicit HeuristicTable(std::vector<Cost> values) : values_(std::move(values)) {}

  Cost operator[](StateId s) const { return values_[s]; }
  void set(StateId s, Cost v) { values_[s] = v; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Cost>& values() const { return values_; }

  bool operator==(const HeuristicTable&) const = default;

 private:
  std::vector<Cost> values_;
};

}  // namespace rtbt
