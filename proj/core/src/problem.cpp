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

#include "rtbt/problem.hpp"

#include <algorithm>

#include "rtbt/errors.hpp"

namespace rtbt {

ProblemSpec::ProblemSpec(std::vector<std::string> names,
                         std::vector<std::vector<Edge>> successors,
                         std::vector<StateId> goals, StateId start,
                         std::vector<Cost> h_init, double epsilon, double theta)
    : names_(std::move(names)),
      successors_(std::move(successors)),
      goals_(std::move(goals)),
      start_(start),
      h_init_(std::move(h_init)),
      epsilon_(epsilon),
      theta_(theta) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("problem has no states");
  if (!(epsilon_ > 0.0)) throw InputError("epsilon must be positive");
  if (!(theta_ > 0.0)) throw InputError("theta must be positive");
  if (successors_.size() != n || h_init_.size() != n)
    throw InputError("successor lists and h_init must cover every state");
  for (StateId s = 0; s < n; ++s) {
    if (names_[s].empty()) throw InputError("empty state name");
    if (!by_name_.emplace(names_[s], s).second)
      throw InputError("duplicate state name '" + names_[s] + "'");
    if (h_init_[s].is_infinite() || h_init_[s] < Cost::zero())
      throw InputError("h_init of '" + names_[s] + "' must be finite and non-negative");
  }
  predecessors_.resize(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Edge& e : successors_[s]) {
      if (e.to >= n) throw InputError("edge from '" + names_[s] + "' to unknown state");
      if (e.weight.is_infinite() || e.weight < Cost(1))
        throw InputError("edge weight from '" + names_[s] + "' must be at least epsilon");
      predecessors_[e.to].push_back(Edge{s, e.weight});
      ++edge_count_;
    }
  }
  if (goals_.empty()) throw InputError("goal set is empty");
  std::sort(goals_.begin(), goals_.end());
  goals_.erase(std::unique(goals_.begin(), goals_.end()), goals_.end());
  goal_mask_.assign(n, false);
  for (StateId g : goals_) {
    if (g >= n) throw InputError("unknown goal state");
    goal_mask_[g] = true;
  }
  if (start_ >= n) throw InputError("unknown start state");
}

const std::string& ProblemSpec::name(StateId s) const {
  check_state(s);
  return names_[s];
}

std::optional<StateId> ProblemSpec::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

StateId ProblemSpec::id(std::string_view name) const {
  auto s = find(name);
  if (!s) throw InputError("unknown state '" + std::string(name) + "'");
  return *s;
}

std::span<const Edge> ProblemSpec::successors(StateId s) const {
  check_state(s);
  return successors_[s];
}

std::span<const Edge> ProblemSpec::predecessors(StateId s) const {
  check_state(s);
  return predecessors_[s];
}

bool ProblemSpec::is_goal(StateId s) const {
  check_state(s);
  return goal_mask_[s];
}

void ProblemSpec::check_state(StateId s) const {
  if (s >= names_.size()) throw InputError("unknown state id " + std::to_string(s));
}

ProblemSpec ProblemSpec::with_theta(double theta) const {
  return ProblemSpec(names_, successors_, goals_, start_, h_init_, epsilon_, theta);
}

ProblemSpec ProblemSpec::with_h_init(std::vector<Cost> h_init) const {
  return ProblemSpec(names_, successors_, goals_, start_, std::move(h_init), epsilon_,
                     theta_);
}

ProblemSpec ProblemSpec::with_start(StateId start) const {
  return ProblemSpec(names_, successors_, goals_, start, h_init_, epsilon_, theta_);
}

bool ProblemSpec::operator==(const ProblemSpec& o) const {
  if (names_ != o.names_ || goals_ != o.goals_ || start_ != o.start_ ||
      h_init_ != o.h_init_ || epsilon_ != o.epsilon_ || theta_ != o.theta_)
    return false;
  for (std::size_t s = 0; s < successors_.size(); ++s) {
    const auto& a = successors_[s];
    const auto& b = o.successors_[s];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].to != b[i].to || a[i].weight != b[i].weight) return false;
  }
  return true;
}

StateId ProblemBuilder::ensure(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<StateId>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  successors_.emplace_back();
  h_.push_back(Cost::zero());
  return id;
}

StateId ProblemBuilder::add_state(const std::string& name, Cost h) {
  const StateId id = ensure(name);
  h_[id] = h;
  return id;
}

void ProblemBuilder::add_edge(const std::string& from, const std::string& to, Cost weight) {
  const StateId a = ensure(from);
  const StateId b = ensure(to);
  successors_[a].push_back(Edge{b, weight});
}

void ProblemBuilder::add_undirected_edge(const std::string& a, const std::string& b,
                                         Cost weight) {
  add_edge(a, b, weight);
  add_edge(b, a, weight);
}

void ProblemBuilder::add_goal(const std::string& name) { goals_.push_back(ensure(name)); }

void ProblemBuilder::set_start(const std::string& name) { start_ = ensure(name); }

void ProblemBuilder::set_h(const std::string& name, Cost h) { h_[ensure(name)] = h; }

ProblemSpec ProblemBuilder::build() const {
  if (!start_) throw InputError("start state not set");
  return ProblemSpec(names_, successors_, goals_, *start_, h_, epsilon_, theta_);
}

}  // namespace rtbt
