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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rtbt/admissibility.hpp"
#include "rtbt/algorithms.hpp"
#include "rtbt/framework.hpp"

namespace rtbt {

// Closed-form solution-cost bounds, in real cost units.

/// (2 theta d0 + delta eps / ln 2) * 2^(T / (delta eps)).
double exponential_bound(double theta, double d0, std::uint32_t delta, double epsilon,
                         double quota);
/// 3 theta d0 + 2 T.
double piecewise_bound(double theta, double d0, double quota);
/// d0 + T.
double slat_bound(double d0, double quota);

struct AlgorithmSpec {
  AlgorithmId id = AlgorithmId::kLrta;
  bool acyclic = false;
  std::string label() const;
};

struct SweepRecord {
  std::string algorithm;
  std::string problem;
  double epsilon = 1.0;
  Cost quota;
  double theta = 1.0;
  Cost optimal_cost;  // dist(s0, goals)
  Cost solution_cost;
  Cost travel_cost;
  std::uint64_t cycles = 0;
  /// Applicable bound in quantum units; +inf when none applies.
  double bound = 0.0;
  std::string bound_id;
  /// False for bounds reported for comparison only.
  bool bound_asserted = true;
  bool within_bound = true;
  bool timed_out = false;
  std::size_t audit_violations = 0;
};

/// Bound that applies to an algorithm's runs, or "none".
struct ApplicableBound {
  std::string id;
  double value;  // quantum units
  /// False when the value is only a reference point the algorithm is not
  /// guaranteed to meet (cycle-keeping SLA*T against d0 + T).
  bool asserted = true;
};

ApplicableBound applicable_bound(const AlgorithmSpec& algo, double theta,
                                 Cost optimal_cost, Cost quota);

struct SweepOptions {
  bool audit = true;
  std::uint64_t budget = 0;  // 0: default budget per problem
  std::size_t threads = 1;
};

/// Runs every (problem, T) pair, one run per pair, and returns records
/// ordered by (problem, T) in input order.
std::vector<SweepRecord> sweep_quota(const AlgorithmSpec& algo,
                                     std::span<const NamedProblem> problems,
                                     std::span<const Cost> quotas,
                                     const AlgoParams& params,
                                     const SweepOptions& options = {});

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
std::string sweep_csv_header();

struct SweepSummary {
  std::size_t runs = 0;
  std::size_t timeouts = 0;
  std::size_t bound_violations = 0;  // asserted bounds, non-timeout runs only
  std::size_t audit_violations = 0;
};

SweepSummary summarize(std::span<const SweepRecord> records);

/// Non-negative a, b, c with cost <= a d0 + b T + c at every record,
/// chosen to make the envelope tight. Timeouts are skipped.
struct AffineEnvelope {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double evaluate(double d0, double quota) const { return a * d0 + b * quota + c; }
};

/// Fits in quantum units over non-timeout records.
AffineEnvelope fit_affine_envelope(std::span<const SweepRecord> records);

// Exploratory: looking for adversarial behaviour rather than asserting it.

struct CycleExcessSearch {
  std::size_t problems_tried = 0;
  std::size_t runs = 0;
  /// Plain (cycle-keeping) SLA*T runs whose cost exceeded d0 + T.
  std::vector<SweepRecord> exceeding;
};

/// Random small problems with weak heuristics, plain SLA*T over the quotas.
CycleExcessSearch search_cycle_excess(std::uint64_t first_seed, std::size_t seeds,
                                      std::size_t size, std::span<const Cost> quotas,
                                      const AlgoParams& params);

struct QuotaGrowth {
  std::string problem;
  std::vector<Cost> quotas;
  std::vector<Cost> costs;
  /// Log-log slope of (cost(T) - cost(0)) against T over T > 0 with positive
  /// excess; 0 when there is no such pair.
  double growth_exponent = 0.0;
};

std::vector<QuotaGrowth> explore_quota_growth(const AlgorithmSpec& algo,
                                              std::span<const NamedProblem> problems,
                                              std::span<const Cost> quotas,
                                              const AlgoParams& params);

}  // namespace rtbt
