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

#include <gtest/gtest.h>

#include <sstream>

#include "../support/corpus.hpp"
#include "rtbt/algorithms.hpp"
#include "rtbt/errors.hpp"
#include "rtbt/generators.hpp"
#include "rtbt/grid_map.hpp"
#include "rtbt/problem_io.hpp"
#include "rtbt/run_config.hpp"
#include "rtbt/trace_io.hpp"
#include "rtbt/validation.hpp"

#ifndef RTBT_TEST_DATA
#define RTBT_TEST_DATA "tests/data"
#endif

namespace rtbt {
namespace {

const std::string kData = RTBT_TEST_DATA;

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

// Grid maps ----------------------------------------------------------------

TEST(GridMap, ThreeCellCorridor) {
  const GridMap m = parse_grid_map("S.G");
  EXPECT_EQ(m.width, 3u);
  EXPECT_EQ(m.height, 1u);
  EXPECT_EQ(m.free_cells(), 3u);
  EXPECT_EQ(m.start, m.index(0, 0));
  ASSERT_EQ(m.goals.size(), 1u);
  EXPECT_EQ(m.goals[0], m.index(2, 0));
}

TEST(GridMap, ParseErrorsCarryPosition) {
  auto expect_error = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      parse_grid_map(text);
      ADD_FAILURE() << "no error for " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_EQ(e.column(), col) << text;
    }
  };
  expect_error("S..\n...\n", 2, 1);     // no goal
  expect_error("...\n..G\n", 2, 1);     // no start
  expect_error("S.G\n..\n", 2, 3);      // ragged
  expect_error("S.G\n.x.\n", 2, 2);     // unknown glyph
  expect_error("S.G\nS..\n", 2, 1);     // second start
  expect_error("", 1, 1);
  EXPECT_THROW(load_grid_map(kData + "/ragged.map"), ParseError);
}

TEST(GridMap, OpenSixByFiveHasThirtyStatesTwoGoals) {
  const GridMap m = load_grid_map(kData + "/open6x5.map");
  EXPECT_EQ(m.width, 6u);
  EXPECT_EQ(m.height, 5u);
  const ProblemSpec p = grid_to_problem(m, 1.0, HeuristicKind::kManhattan);
  EXPECT_EQ(p.size(), 30u);
  EXPECT_EQ(p.goals().size(), 2u);
  EXPECT_TRUE(p.is_goal(p.id("5_0")));
  EXPECT_TRUE(p.is_goal(p.id("5_4")));
  EXPECT_TRUE(validate_problem(p).ok());
}

TEST(GridToProblem, HeuristicKinds) {
  const GridMap m = parse_grid_map("S.G");
  const ProblemSpec manhattan = grid_to_problem(m, 1.0, HeuristicKind::kManhattan);
  const std::vector<Cost> expected{Cost(2), Cost(1), Cost(0)};
  EXPECT_EQ(manhattan.h_init(), expected);
  const ProblemSpec zero = grid_to_problem(m, 1.0, HeuristicKind::kZero);
  for (Cost h : zero.h_init()) EXPECT_EQ(h, Cost::zero());
  EXPECT_TRUE(validate_problem(zero.with_theta(0.5)).ok());
  const ProblemSpec exact = grid_to_problem(m, 1.0, HeuristicKind::kExact);
  EXPECT_EQ(exact.h_init(), expected);
  EXPECT_THROW(grid_to_problem(m, 1.0, HeuristicKind::kScaledExact), ConfigError);
}

TEST(GridToProblem, OnlyReachableCellsAndDeterministic) {
  const std::string text = "S..G\n##..\n.#..\n";
  const ProblemSpec a = grid_to_problem(parse_grid_map(text), 1.0, HeuristicKind::kManhattan);
  const ProblemSpec b = grid_to_problem(parse_grid_map(text), 1.0, HeuristicKind::kManhattan);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 8u);  // the lower-left cell is walled off
  EXPECT_THROW(grid_to_problem(parse_grid_map("S#G"), 1.0, HeuristicKind::kZero), InputError);
  const ProblemSpec open = grid_to_problem(parse_grid_map("S.#\n..G\n"), 1.0, HeuristicKind::kZero);
  EXPECT_EQ(open.size(), 5u);
  for (StateId s = 0; s < open.size(); ++s)
    for (const Edge& e : open.successors(s)) EXPECT_EQ(e.weight, Cost(1));
}

// Generators ---------------------------------------------------------------

TEST(Generators, ChainOfFourIsChain4) {
  GenOptions o;
  o.kind = GenKind::kChain;
  o.size = 4;
  const ProblemSpec p = gen_problem(o);
  EXPECT_EQ(p, chain4_problem());
  EXPECT_DOUBLE_EQ(p.epsilon(), 0.1);
  EXPECT_EQ(p.h_init()[p.id("D")].units(), 7);
  EXPECT_EQ(p.name(p.start()), "C");
}

TEST(Generators, LongerChainsAreValid) {
  for (std::size_t n : {2u, 3u, 5u, 9u, 30u}) {
    GenOptions o;
    o.kind = GenKind::kChain;
    o.size = n;
    EXPECT_TRUE(validate_problem(gen_problem(o)).ok()) << n;
  }
}

TEST(Generators, RandomProblemsValidateForManySeeds) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenOptions o;
    o.seed = seed;
    o.size = 2 + seed % 40;
    o.theta = seed % 2 ? 1.0 : 1.7;
    o.lambda_min = 0.3;
    const ProblemSpec p = gen_problem(o);
    const auto report = validate_problem(p);
    ASSERT_TRUE(report.ok()) << "seed " << seed << "\n" << report.to_string(p);
    for (StateId s = 0; s < p.size(); ++s)
      for (const Edge& e : p.successors(s)) {
        EXPECT_GE(e.weight.units(), o.weight_min);
        EXPECT_LE(e.weight.units(), o.weight_max);
      }
  }
}

TEST(Generators, SameSeedSameProblem) {
  GenOptions o;
  o.seed = 42;
  o.size = 50;
  EXPECT_EQ(gen_problem(o), gen_problem(o));
  GenOptions other = o;
  other.seed = 43;
  EXPECT_FALSE(gen_problem(o) == gen_problem(other));
}

TEST(Generators, PositiveNonGoalHeuristic) {
  GenOptions o;
  o.seed = 5;
  o.size = 30;
  o.positive_nongoal_h = true;
  const ProblemSpec p = gen_problem(o);
  for (StateId s = 0; s < p.size(); ++s) EXPECT_EQ(p.h_init()[s] == Cost::zero(), p.is_goal(s));
}

TEST(Generators, RejectsTinyProblems) {
  GenOptions o;
  o.size = 1;
  EXPECT_THROW(gen_problem(o), InputError);
}

// Problem text format --------------------------------------------------------

TEST(ProblemIo, LoadsChain4File) {
  EXPECT_EQ(load_problem(kData + "/chain4.problem"), chain4_problem());
}

TEST(ProblemIo, RoundTrip) {
  for (const auto& np : testing::make_corpus(20, 2, 40)) {
    const std::string text = format_problem_text(*np.problem);
    EXPECT_EQ(parse_problem_text(text), *np.problem) << np.id;
  }
}

TEST(ProblemIo, ErrorsCarryPosition) {
  auto error_line = [](const std::string& text) -> std::size_t {
    try {
      parse_problem_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(error_line("epsilon 1\nstate a 0\nfoo bar\n"), 3u);
  EXPECT_EQ(error_line("epsilon 0.1\nstate a 0.25\nstate g 0\nedge a g 1\ngoal g\nstart a\n"), 2u);
  EXPECT_EQ(error_line("state a 0\nedge a b 1\ngoal a\nstart a\n"), 2u);
  EXPECT_EQ(error_line("state a x\n"), 1u);
  EXPECT_EQ(error_line("state a 1\nstate a 2\n"), 2u);
  EXPECT_GT(error_line("state a 1\nstate g 0\nedge a g 1\ngoal g\n"), 0u);  // no start
}

// Traces -------------------------------------------------------------------

TEST(Trace, CsvRowCountEqualsCycles) {
  for (const auto& np : testing::make_corpus(10, 5, 40)) {
    SlaPolicy sla;
    const RunResult r = run_search(sla, *np.problem, AlgoParams{});
    const std::string csv = emit_trace(*np.problem, r.trace, TraceFormat::kCsv);
    EXPECT_EQ(line_count(csv), r.cycles + 1);
  }
}

TEST(Trace, EmptyTraceIsHeaderOnly) {
  const ProblemSpec p = chain4_problem();
  EXPECT_EQ(emit_trace(p, {}, TraceFormat::kCsv), trace_csv_header() + "\n");
  EXPECT_EQ(line_count(emit_trace(p, {}, TraceFormat::kTable)), 2u);
}

TEST(Trace, TableRefusesLargeProblems) {
  const ProblemSpec p = gen_problem(testing::corpus_options(0, 11, 11));
  EXPECT_THROW(emit_trace(p, {}, TraceFormat::kTable), FormatError);
}

TEST(Trace, TableShowsFinalLearningAmount) {
  LrtaPolicy lrta;
  const ProblemSpec p = chain4_problem();
  const RunResult r = run_search(lrta, p, AlgoParams{});
  const std::string table = emit_trace(p, r.trace, TraceFormat::kTable);
  std::istringstream in(table);
  std::string line, last;
  while (std::getline(in, line)) last = line;
  EXPECT_EQ(last.substr(0, 1), "4");
  EXPECT_NE(last.find("[C,D,C,B,A]"), std::string::npos);
  EXPECT_EQ(last.substr(last.size() - 3), "3.0");
}

TEST(Trace, ParseAndReplayRoundTrip) {
  for (const auto& np : testing::make_corpus(30, 2, 60)) {
    for (AlgorithmId id : {AlgorithmId::kLrta, AlgorithmId::kSlat, AlgorithmId::kPiecewise}) {
      AlgoParams params;
      params.quota = Cost(4);
      auto policy = make_policy(id, id == AlgorithmId::kSlat);
      const RunResult r = run_search(*policy, *np.problem, params);
      const std::string csv = emit_trace(*np.problem, r.trace, TraceFormat::kCsv);
      const auto parsed = parse_trace_csv(*np.problem, csv);
      ASSERT_EQ(parsed.size(), r.trace.size());
      EXPECT_EQ(emit_trace(*np.problem, parsed, TraceFormat::kCsv), csv);
      const ReplayResult replay = replay_trace(*np.problem, params, parsed);
      EXPECT_TRUE(replay.errors.empty()) << np.id;
      EXPECT_TRUE(replay.violations.empty()) << np.id;
      EXPECT_EQ(replay.final_state.stack, r.final_stack);
      EXPECT_EQ(replay.final_state.h, r.final_h);
    }
  }
}

TEST(Trace, ReplayFlagsTamperedRecords) {
  const ProblemSpec p = chain4_problem();
  LrtaPolicy lrta;
  const RunResult r = run_search(lrta, p, AlgoParams{});
  auto trace = r.trace;
  trace[1].changes[0].after = Cost(5);  // h(D) lowered instead of raised
  const ReplayResult replay = replay_trace(p, AlgoParams{}, trace);
  EXPECT_FALSE(replay.violations.empty());
  trace = r.trace;
  trace[2].top = p.id("A");
  EXPECT_FALSE(replay_trace(p, AlgoParams{}, trace).errors.empty());
}

TEST(Trace, ParseErrors) {
  const ProblemSpec p = chain4_problem();
  EXPECT_THROW(parse_trace_csv(p, "bogus\n"), ParseError);
  EXPECT_THROW(parse_trace_csv(p, trace_csv_header() + "\n0,C,1,fly,D,1,0,0,B;D,\n"), ParseError);
  EXPECT_THROW(parse_trace_csv(p, trace_csv_header() + "\n0,Z,1,stay,C,1,0,0,B;D,\n"), ParseError);
  EXPECT_THROW(parse_trace_csv(p, trace_csv_header() + "\n0,C,1,stay\n"), ParseError);
  EXPECT_EQ(parse_trace_csv(p, trace_csv_header() + "\n").size(), 0u);
}

TEST(Trace, FormatNames) {
  EXPECT_EQ(parse_trace_format("csv"), TraceFormat::kCsv);
  EXPECT_EQ(parse_trace_format("table"), TraceFormat::kTable);
  EXPECT_THROW(parse_trace_format("xml"), ConfigError);
}

// RunConfig ----------------------------------------------------------------

TEST(RunConfig, ChecksConsistency) {
  RunConfig c;
  c.gen = "chain";
  c.size = 4;
  EXPECT_NO_THROW(check_config(c));
  RunConfig bad = c;
  bad.gamma_bar = 2.0;
  EXPECT_THROW(check_config(bad), ConfigError);
  bad = c;
  bad.k = 0;
  EXPECT_THROW(check_config(bad), ConfigError);
  bad = c;
  bad.dmax = 0;
  EXPECT_THROW(check_config(bad), ConfigError);
  bad = c;
  bad.map = "x.map";
  EXPECT_THROW(check_config(bad), ConfigError);
  bad = c;
  bad.gen.reset();
  EXPECT_THROW(check_config(bad), ConfigError);
  bad = c;
  bad.algo = "astar";
  EXPECT_THROW(check_config(bad), ConfigError);
  bad = c;
  bad.accounting = "some";
  EXPECT_THROW(check_config(bad), ConfigError);
}

TEST(RunConfig, ParamsAndProblem) {
  RunConfig c;
  c.gen = "chain";
  c.size = 4;
  c.quota = 1.0;
  c.dmax = 3;
  c.k = 2;
  c.accounting = "axiom";
  const ProblemSpec p = load_configured_problem(c);
  EXPECT_EQ(p, chain4_problem());
  const AlgoParams params = to_params(c, p.epsilon());
  EXPECT_EQ(params.quota.units(), 10);
  EXPECT_EQ(params.d_max, 3u);
  EXPECT_EQ(params.segment_length, 2u);
  EXPECT_EQ(params.accounting, AccountingMode::kAxiomExclusion);
  c.quota = -1.0;
  EXPECT_TRUE(to_params(c, 0.1).quota.is_infinite());

  RunConfig m;
  m.map = kData + "/open6x5.map";
  EXPECT_EQ(load_configured_problem(m).size(), 30u);
  RunConfig f;
  f.problem = kData + "/chain4.problem";
  f.theta = 1.5;
  EXPECT_DOUBLE_EQ(load_configured_problem(f).theta(), 1.5);
}

}  // namespace
}  // namespace rtbt
