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

#include "rtbt/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "rtbt/generators.hpp"

namespace rtbt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double units_of(Cost c) {
  return c.is_infinite() ? kInf : static_cast<double>(c.units());
}

bool is_one(double theta) { return std::abs(theta - 1.0) <= 1e-12; }

}  // namespace

double exponential_bound(double theta, double d0, std::uint32_t delta, double epsilon,
                         double quota) {
  const double step = static_cast<double>(delta) * epsilon;
  return (2.0 * theta * d0 + step / std::log(2.0)) * std::exp2(quota / step);
}

double piecewise_bound(double theta, double d0, double quota) {
  return 3.0 * theta * d0 + 2.0 * quota;
}

double slat_bound(double d0, double quota) { return d0 + quota; }

std::string AlgorithmSpec::label() const {
  std::string out(to_string(id));
  if (acyclic) out += "+acyclic";
  return out;
}

ApplicableBound applicable_bound(const AlgorithmSpec& algo, double theta, Cost optimal_cost,
                                 Cost quota) {
  const double d0 = units_of(optimal_cost);
  const double t = units_of(quota);
  switch (algo.id) {
    case AlgorithmId::kPiecewise:
      return {"piecewise", piecewise_bound(theta, d0, t)};
    case AlgorithmId::kSlat:
      if (!is_one(theta)) break;
      if (algo.acyclic) return {"slat_acyclic", slat_bound(d0, t)};
      return {"slat_unpruned", slat_bound(d0, t), false};
    case AlgorithmId::kSla:
      if (is_one(theta)) return {"sla_optimal", d0};
      break;
    default:
      break;
  }
  return {"none", kInf, false};
}

namespace {

SweepRecord run_one(const AlgorithmSpec& algo, const NamedProblem& named,
                    const DistanceOracle& oracle, Cost quota, const AlgoParams& base,
                    const SweepOptions& options) {
  const ProblemSpec& problem = *named.problem;
  AlgoParams params = base;
  params.quota = quota;
  params.theta = problem.theta();
  params.gamma_bar = std::min(params.gamma_bar, params.theta);
  params.gamma = std::min(params.gamma, params.gamma_bar);

  auto policy = make_policy(algo.id, algo.acyclic);
  RunLimits limits;
  limits.budget = options.budget;
  limits.audit = options.audit;
  limits.record_trace = false;
  const RunResult run = run_search(*policy, oracle, params, limits);

  SweepRecord r;
  r.algorithm = algo.label();
  r.problem = named.id;
  r.epsilon = problem.epsilon();
  r.quota = quota;
  r.theta = problem.theta();
  r.optimal_cost = oracle.goal_distance(problem.start());
  r.solution_cost = run.solution_cost;
  r.travel_cost = run.travel_cost;
  r.cycles = run.cycles;
  const ApplicableBound b = applicable_bound(algo, r.theta, r.optimal_cost, quota);
  r.bound = b.value;
  r.bound_id = b.id;
  r.bound_asserted = b.asserted;
  r.timed_out = run.timed_out;
  r.within_bound = run.timed_out || units_of(run.solution_cost) <= b.value + 1e-6;
  r.audit_violations = run.audit.size();
  return r;
}

}  // namespace

std::vector<SweepRecord> sweep_quota(const AlgorithmSpec& algo,
                                     std::span<const NamedProblem> problems,
                                     std::span<const Cost> quotas, const AlgoParams& params,
                                     const SweepOptions& options) {
  std::vector<SweepRecord> out(problems.size() * quotas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t p = next.fetch_add(1);
      if (p >= problems.size()) return;
      try {
        const DistanceOracle oracle(*problems[p].problem);
        for (std::size_t q = 0; q < quotas.size(); ++q)
          out[p * quotas.size() + q] = run_one(algo, problems[p], oracle, quotas[q], params, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = problems.size();
        return;
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, problems.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string sweep_csv_header() {
  return "algorithm,problem,epsilon,quota,theta,optimal_cost,solution_cost,travel_cost,cycles,"
         "bound,bound_id,bound_asserted,within_bound,timed_out,audit_violations";
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << sweep_csv_header() << '\n';
  for (const SweepRecord& r : records) {
    const double eps = r.epsilon;
    const std::string bound = std::isfinite(r.bound) ? format_real(r.bound * eps) : "inf";
    out << r.algorithm << ',' << r.problem << ',' << format_real(eps) << ','
        << format_cost(r.quota, eps) << ',' << format_real(r.theta) << ','
        << format_cost(r.optimal_cost, eps) << ',' << format_cost(r.solution_cost, eps) << ','
        << format_cost(r.travel_cost, eps) << ',' << r.cycles << ',' << bound << ','
        << r.bound_id << ',' << (r.bound_asserted ? 1 : 0) << ',' << (r.within_bound ? 1 : 0)
        << ',' << (r.timed_out ? 1 : 0) << ',' << r.audit_violations << '\n';
  }
}

SweepSummary summarize(std::span<const SweepRecord> records) {
  SweepSummary s;
  for (const SweepRecord& r : records) {
    ++s.runs;
    if (r.timed_out) ++s.timeouts;
    if (r.bound_asserted && !r.timed_out && !r.within_bound) ++s.bound_violations;
    s.audit_violations += r.audit_violations;
  }
  return s;
}

AffineEnvelope fit_affine_envelope(std::span<const SweepRecord> records) {
  struct Point {
    double d0, t, cost;
  };
  std::vector<Point> pts;
  for (const SweepRecord& r : records) {
    if (r.timed_out || r.quota.is_infinite() || r.solution_cost.is_infinite()) continue;
    pts.push_back({units_of(r.optimal_cost), units_of(r.quota), units_of(r.solution_cost)});
  }
  AffineEnvelope best;
  if (pts.empty()) return best;
  double best_slack = kInf;
  constexpr double kStep = 0.05;
  constexpr int kSteps = 80;  // coefficients in [0, 4]
  for (int i = 0; i <= kSteps; ++i) {
    const double a = i * kStep;
    for (int j = 0; j <= kSteps; ++j) {
      const double b = j * kStep;
      double c = 0.0;
      for (const Point& p : pts) c = std::max(c, p.cost - a * p.d0 - b * p.t);
      double slack = 0.0;
      for (const Point& p : pts) slack += a * p.d0 + b * p.t + c - p.cost;
      if (slack < best_slack - 1e-9) {
        best_slack = slack;
        best = {a, b, c};
      }
    }
  }
  return best;
}

CycleExcessSearch search_cycle_excess(std::uint64_t first_seed, std::size_t seeds,
                                      std::size_t size, std::span<const Cost> quotas,
                                      const AlgoParams& params) {
  CycleExcessSearch out;
  const AlgorithmSpec algo{AlgorithmId::kSlat, false};
  for (std::uint64_t seed = first_seed; seed < first_seed + seeds; ++seed) {
    GenOptions opt;
    opt.kind = GenKind::kRandom;
    opt.size = size;
    opt.seed = seed;
    opt.lambda_min = 0.0;
    opt.extra_edges_per_state = 1.0;
    NamedProblem named{"random-" + std::to_string(size) + "-" + std::to_string(seed),
                       std::make_shared<const ProblemSpec>(gen_problem(opt))};
    ++out.problems_tried;
    auto records = sweep_quota(algo, std::span(&named, 1), quotas, params, {false, 0, 1});
    for (auto& r : records) {
      ++out.runs;
      if (!r.timed_out && !r.within_bound) out.exceeding.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<QuotaGrowth> explore_quota_growth(const AlgorithmSpec& algo,
                                              std::span<const NamedProblem> problems,
                                              std::span<const Cost> quotas,
                                              const AlgoParams& params) {
  std::vector<Cost> all{Cost::zero()};
  for (Cost q : quotas)
    if (q != Cost::zero()) all.push_back(q);
  std::vector<QuotaGrowth> out;
  for (const NamedProblem& named : problems) {
    const auto records = sweep_quota(algo, std::span(&named, 1), all, params, {false, 0, 1});
    QuotaGrowth g;
    g.problem = named.id;
    const double base = units_of(records.front().solution_cost);
    std::vector<std::pair<double, double>> logs;
    for (const SweepRecord& r : records) {
      g.quotas.push_back(r.quota);
      g.costs.push_back(r.solution_cost);
      if (r.timed_out || r.quota.is_infinite() || r.quota == Cost::zero()) continue;
      const double excess = units_of(r.solution_cost) - base;
      if (excess > 0.0 && std::isfinite(excess))
        logs.emplace_back(std::log(units_of(r.quota)), std::log(excess));
    }
    if (logs.size() >= 2) {
      double mx = 0, my = 0;
      for (auto [x, y] : logs) mx += x, my += y;
      mx /= static_cast<double>(logs.size());
      my /= static_cast<double>(logs.size());
      double sxy = 0, sxx = 0;
      for (auto [x, y] : logs) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
      g.growth_exponent = sxx > 0 ? sxy / sxx : 0.0;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace rtbt
