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
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rtbt/framework.hpp"

namespace rtbt {

/// Picks among equal f-values: smallest state id, or uniformly at random
/// when a tie seed is configured.
class TieBreaker {
 public:
  void reset(const AlgoParams& params);
  /// Index into candidates of a minimum; candidates must be non-empty.
  std::size_t pick_min(const std::vector<StateId>& states,
                       const std::vector<Cost>& values);

 private:
  std::optional<std::mt19937_64> rng_;
};

/// Immediate-neighbour lookahead shared by LRTA*, SLA*, SLA*T and piecewise
/// search: the f-values of all successors and the chosen minimum.
struct NeighbourScan {
  StateSet lss;
  StateId best = kNoState;
  Cost best_f = Cost::infinity();
};

NeighbourScan scan_neighbours(const SearchContext& ctx, const AgentState& state,
                              double gamma, TieBreaker& ties);

/// Korf's LRTA* with lookahead one: raises h(top) to the minimum f over the
/// successors and always moves forward to the minimiser.
class LrtaPolicy final : public StepPolicy {
 public:
  std::string name() const override { return "lrta"; }
  void reset(const SearchContext& ctx) override { ties_.reset(ctx.params); }
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override;

 private:
  TieBreaker ties_;
};

/// SLA*: learning triggers a backtracking move; forward only when the top is
/// locally consistent. At the start state a backtrack becomes a stay.
class SlaPolicy final : public StepPolicy {
 public:
  std::string name() const override { return "sla"; }
  void reset(const SearchContext& ctx) override { ties_.reset(ctx.params); }
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override;

 private:
  TieBreaker ties_;
};

/// SLA*T: LRTA* while the learning amount stays within the quota, SLA*
/// afterwards. The threshold uses the configured accounting mode.
class SlatPolicy final : public StepPolicy {
 public:
  std::string name() const override { return "slat"; }
  void reset(const SearchContext& ctx) override { ties_.reset(ctx.params); }
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override;

 private:
  TieBreaker ties_;
};

/// Lookahead that grows the full-width frontier from the current state until
/// the state is no longer a trap, updates every examined state with the
/// synchronous max-of-mins rule and jumps to the best frontier state.
class DynamicLookaheadPolicy final : public StepPolicy {
 public:
  std::string name() const override { return "dynlook"; }
  void reset(const SearchContext& ctx) override { ties_.reset(ctx.params); }
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override;

  /// Depth chosen in the last decide() call.
  std::uint32_t last_depth() const { return last_depth_; }

 private:
  TieBreaker ties_;
  std::uint32_t last_depth_ = 0;
};

/// Removes cycles from the wrapped policy's stack at move time: a forward
/// move onto a state already on the stack cuts the stack back to it.
class AcyclicPolicy final : public StepPolicy {
 public:
  explicit AcyclicPolicy(std::unique_ptr<StepPolicy> inner) : inner_(std::move(inner)) {}

  std::string name() const override { return inner_->name() + "+acyclic"; }
  void reset(const SearchContext& ctx) override { inner_->reset(ctx); }
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override;
  void observe(const SearchContext& ctx, const AgentState& after,
               const StepDecision& applied) override {
    inner_->observe(ctx, after, applied);
  }

 private:
  std::unique_ptr<StepPolicy> inner_;
};

std::unique_ptr<StepPolicy> make_acyclic(std::unique_ptr<StepPolicy> policy);

/// Segment bookkeeping for piecewise backtracking search.
struct SegmentState {
  /// Stack index of the first state of each segment; begins[0] == 0.
  std::vector<std::size_t> begins{0};
  std::size_t k = 1;
  bool final_segment_started = false;
  /// Value of the boundary discrepancy sum when the last segment started,
  /// in quantum units (may be negative).
  std::int64_t discrepancy_sum = 0;

  std::size_t current_begin() const { return begins.back(); }
};

/// Piecewise backtracking: SLA* inside fixed-length stack segments, with
/// stays at segment starts instead of backtracking past them. Once the
/// discrepancy between segment boundaries exceeds the quota the newest
/// segment becomes final and may grow without limit.
class PiecewisePolicy final : public StepPolicy {
 public:
  std::string name() const override { return "piecewise"; }
  void reset(const SearchContext& ctx) override;
  StepDecision decide(const SearchContext& ctx, const AgentState& state) override;
  void observe(const SearchContext& ctx, const AgentState& after,
               const StepDecision& applied) override;

  const SegmentState& segments() const { return seg_; }

 private:
  TieBreaker ties_;
  SegmentState seg_;
};

/// Boundary discrepancy sum over the segments of `stack`, evaluated with h.
std::int64_t segment_discrepancy(const DistanceOracle& oracle, const StackPath& stack,
                                 const std::vector<std::size_t>& begins,
                                 const HeuristicTable& h);

enum class AlgorithmId { kLrta, kSla, kSlat, kDynamicLookahead, kPiecewise };

std::string_view to_string(AlgorithmId id);
AlgorithmId parse_algorithm(std::string_view text);

std::unique_ptr<StepPolicy> make_policy(AlgorithmId id, bool acyclic = false);

}  // namespace rtbt
