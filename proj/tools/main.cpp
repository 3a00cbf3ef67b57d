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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rtbt/bounds.hpp"
#include "rtbt/errors.hpp"
#include "rtbt/run_config.hpp"
#include "rtbt/trace_io.hpp"
#include "rtbt/validation.hpp"

namespace {

enum ExitCode : int {
  kGoal = 0,
  kInternal = 1,
  kTimeout = 2,
  kParse = 3,
  kConfig = 4,
  kAudit = 5,
  kInvalidProblem = 6,
};

struct Options {
  rtbt::RunConfig config;
  std::string quota = "inf";
  std::string audit = "on";
  std::optional<std::uint64_t> tie_seed;
  std::optional<std::string> out;
  std::optional<std::string> map;
  std::optional<std::string> problem;
  std::optional<std::string> gen;
  // run
  std::string trace = "csv";
  // sweep
  std::size_t count = 1;
  std::string quota_max;
  std::string quota_step = "0";
  std::size_t threads = 0;
  // audit
  std::string in;
  std::string config_file;
};

void add_common(CLI::App& cmd, Options& o) {
  rtbt::RunConfig& c = o.config;
  cmd.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd.add_option("--config", o.config_file, "Flat key=value file; flags given on the command line win");
  cmd.add_option("--algo", c.algo, "lrta, sla, slat, dynlook or piecewise")
      ->check(CLI::IsMember({"lrta", "sla", "slat", "dynlook", "piecewise"}));
  cmd.add_flag("--acyclic", c.acyclic, "Excise cycles from the stack on forward moves");
  cmd.add_option("--map", o.map, "Grid map file");
  cmd.add_option("--problem", o.problem, "Problem description file");
  cmd.add_option("--gen", o.gen, "Generator kind: chain or random")
      ->check(CLI::IsMember({"chain", "random"}));
  cmd.add_option("--size", c.size, "Generated problem size");
  cmd.add_option("--seed", c.seed, "Generator seed");
  cmd.add_option("--heuristic", c.heuristic, "Grid heuristic: zero, manhattan or exact")
      ->check(CLI::IsMember({"zero", "manhattan", "exact"}));
  cmd.add_option("--theta", c.theta, "Admissibility weight");
  cmd.add_option("--gamma-bar", c.gamma_bar, "Upper bound on the heuristic weight");
  cmd.add_option("--dmax", c.dmax, "Maximum lookahead depth (dynlook)");
  cmd.add_option("--k", c.k, "Segment length (piecewise)");
  cmd.add_option("--tie-seed", o.tie_seed, "Break f ties at random with this seed");
  cmd.add_option("--accounting", c.accounting, "Learning amount accounting: total or axiom")
      ->check(CLI::IsMember({"total", "axiom"}));
  cmd.add_option("--audit", o.audit, "Audit every transition: on or off")
      ->check(CLI::IsMember({"on", "off"}));
  cmd.add_option("--budget", c.budget, "Cycle budget; 0 selects the default");
  cmd.add_option("--out", o.out, "Output file; standard output when absent");
}

double parse_real(const std::string& text, const std::string& what) {
  if (text == "inf") return INFINITY;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') throw rtbt::ConfigError(what + ": not a number: " + text);
  return v;
}

void finish_config(Options& o) {
  rtbt::RunConfig& c = o.config;
  const double q = parse_real(o.quota, "--quota");
  if (q < 0.0) throw rtbt::ConfigError("--quota must be non-negative");
  c.quota = std::isinf(q) ? -1.0 : q;
  c.audit = o.audit == "on";
  c.tie_seed = o.tie_seed;
  c.out = o.out;
  c.map = o.map;
  c.problem = o.problem;
  c.gen = o.gen;
  rtbt::check_config(c);
}

void write_output(const Options& o, const std::string& text) {
  if (!o.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*o.out);
  if (!f) throw rtbt::ConfigError("cannot write '" + *o.out + "'");
  f << text;
}

rtbt::ProblemSpec checked_problem(const rtbt::RunConfig& c, bool& valid) {
  rtbt::ProblemSpec p = rtbt::load_configured_problem(c);
  const auto report = rtbt::validate_problem(p);
  valid = report.ok();
  if (!valid) std::cerr << report.to_string(p);
  return p;
}

std::string stack_text(const rtbt::ProblemSpec& p, const rtbt::StackPath& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + p.name(s.at(i));
  return out + "]";
}

void print_violations(const rtbt::ProblemSpec& p, const std::vector<rtbt::AuditViolation>& v) {
  for (const auto& x : v)
    std::cerr << "violation t=" << x.t << " " << rtbt::to_string(x.condition) << " state="
              << (x.state == rtbt::kNoState ? "-" : p.name(x.state)) << ": " << x.detail << '\n';
}

int cmd_run(Options& o) {
  finish_config(o);
  const auto format = rtbt::parse_trace_format(o.trace);
  bool valid = false;
  const rtbt::ProblemSpec p = checked_problem(o.config, valid);
  if (!valid) return kInvalidProblem;
  const rtbt::AlgoParams params = rtbt::to_params(o.config, p.epsilon());
  auto policy = rtbt::make_policy(rtbt::parse_algorithm(o.config.algo), o.config.acyclic);
  rtbt::RunLimits limits;
  limits.budget = o.config.budget;
  limits.audit = o.config.audit;
  const rtbt::RunResult r = rtbt::run_search(*policy, p, params, limits);
  write_output(o, rtbt::emit_trace(p, r.trace, format));

  const double eps = p.epsilon();
  std::cerr << "status: " << (r.reached_goal ? "goal" : "timeout") << '\n'
            << "cycles: " << r.cycles << '\n'
            << "solution_cost: " << rtbt::format_cost(r.solution_cost, eps) << '\n'
            << "travel_cost: " << rtbt::format_cost(r.travel_cost, eps) << '\n'
            << "learning: " << rtbt::format_cost(r.final_u, eps) << '\n'
            << "stack: " << stack_text(p, r.final_stack) << '\n'
            << "audit_violations: " << r.audit.size() << '\n';
  print_violations(p, r.audit);
  if (!r.audit.empty()) return kAudit;
  return r.reached_goal ? kGoal : kTimeout;
}

int cmd_sweep(Options& o) {
  finish_config(o);
  const rtbt::RunConfig& c = o.config;
  std::vector<rtbt::NamedProblem> problems;
  const std::size_t count = c.gen ? std::max<std::size_t>(1, o.count) : 1;
  double epsilon = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    rtbt::RunConfig each = c;
    each.seed = c.seed + i;
    bool valid = false;
    auto p = std::make_shared<const rtbt::ProblemSpec>(checked_problem(each, valid));
    if (!valid) return kInvalidProblem;
    if (epsilon == 0.0) epsilon = p->epsilon();
    if (p->epsilon() != epsilon) throw rtbt::ConfigError("sweep problems must share epsilon");
    std::string id;
    if (c.gen)
      id = *c.gen + "-" + std::to_string(c.size) + "-" + std::to_string(each.seed);
    else
      id = c.map ? *c.map : *c.problem;
    problems.push_back({id, std::move(p)});
  }

  const double qmax = o.quota_max.empty() ? 20.0 * epsilon : parse_real(o.quota_max, "--quota-max");
  double step = parse_real(o.quota_step, "--quota-step");
  if (step == 0.0) step = epsilon;
  if (!(step > 0.0) || !std::isfinite(qmax) || qmax < 0.0)
    throw rtbt::ConfigError("quota range needs a finite --quota-max and a positive step");
  std::vector<rtbt::Cost> quotas;
  const auto step_units = static_cast<rtbt::Cost::Units>(std::floor(step / epsilon + 1e-9));
  const auto max_units = static_cast<rtbt::Cost::Units>(std::floor(qmax / epsilon + 1e-9));
  if (step_units <= 0) throw rtbt::ConfigError("--quota-step is below epsilon");
  for (rtbt::Cost::Units q = 0; q <= max_units; q += step_units) quotas.emplace_back(q);

  rtbt::SweepOptions so;
  so.audit = c.audit;
  so.budget = c.budget;
  so.threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  const rtbt::AlgorithmSpec algo{rtbt::parse_algorithm(c.algo), c.acyclic};
  const auto records =
      rtbt::sweep_quota(algo, problems, quotas, rtbt::to_params(c, epsilon), so);
  std::ostringstream csv;
  rtbt::write_sweep_csv(csv, records);
  write_output(o, csv.str());

  const auto s = rtbt::summarize(records);
  std::cerr << "runs: " << s.runs << '\n'
            << "timeouts: " << s.timeouts << '\n'
            << "bound_violations: " << s.bound_violations << '\n'
            << "audit_violations: " << s.audit_violations << '\n';
  if (s.audit_violations) return kAudit;
  return s.timeouts ? kTimeout : kGoal;
}

int cmd_audit(Options& o) {
  finish_config(o);
  bool valid = false;
  const rtbt::ProblemSpec p = checked_problem(o.config, valid);
  if (!valid) return kInvalidProblem;
  std::ifstream f(o.in);
  if (!f) throw rtbt::ConfigError("cannot read trace '" + o.in + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  const auto trace = rtbt::parse_trace_csv(p, buf.str());
  const auto r = rtbt::replay_trace(p, rtbt::to_params(o.config, p.epsilon()), trace);
  for (const auto& e : r.errors) std::cerr << "inconsistent: " << e << '\n';
  print_violations(p, r.violations);
  std::ostringstream out;
  out << "records: " << trace.size() << '\n'
      << "inconsistencies: " << r.errors.size() << '\n'
      << "violations: " << r.violations.size() << '\n';
  write_output(o, out.str());
  return r.errors.empty() && r.violations.empty() ? kGoal : kAudit;
}

int cmd_validate(Options& o) {
  finish_config(o);
  const rtbt::ProblemSpec p = rtbt::load_configured_problem(o.config);
  const auto report = rtbt::validate_problem(p);
  std::ostringstream out;
  out << "states: " << p.size() << '\n'
      << "edges: " << p.edge_count() << '\n'
      << "goals: " << p.goals().size() << '\n';
  if (report.ok())
    out << "valid\n";
  else
    out << report.to_string(p);
  write_output(o, out.str());
  return report.ok() ? kGoal : kInvalidProblem;
}

}  // namespace

// Splices the entries of a --config file in as flags right after the
// subcommand, so that flags given on the command line take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  std::vector<std::string> flags;
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(*path)) {
    if (!item.parents.empty() && item.parents.front() != "default")
      throw CLI::ConversionError("config", "sections are not supported: " + item.fullname());
    std::string value;
    for (const std::string& v : item.inputs) value += (value.empty() ? "" : " ") + v;
    flags.push_back("--" + item.name + "=" + value);
  }
  const auto sub = std::find_if(args.begin(), args.end(),
                                [](const std::string& a) { return a.empty() || a[0] != '-'; });
  if (sub == args.end()) return args;
  args.insert(sub + 1, flags.begin(), flags.end());
  return args;
}

int main(int argc, char** argv) {
  CLI::App app{"Real-time heuristic search with backtracking"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Single run; writes the trace");
  add_common(*run, o);
  run->add_option("--quota", o.quota, "Learning quota T, or inf");
  run->add_option("--trace", o.trace, "Trace format: csv or table")
      ->check(CLI::IsMember({"csv", "table"}));

  auto* sweep = app.add_subcommand("sweep", "Quota sweep; writes one CSV row per run");
  add_common(*sweep, o);
  sweep->add_option("--count", o.count, "Number of generated problems (seeds seed..)");
  sweep->add_option("--quota-max", o.quota_max, "Largest quota; 20 epsilon when absent");
  sweep->add_option("--quota-step", o.quota_step, "Quota step; 0 selects epsilon");
  sweep->add_option("--threads", o.threads, "Worker threads; 0 selects all cores");

  auto* audit = app.add_subcommand("audit", "Replay a CSV trace through the auditor");
  add_common(*audit, o);
  audit->add_option("--quota", o.quota, "Learning quota T the trace was produced with");
  audit->add_option("--in", o.in, "Trace file")->required();

  auto* validate = app.add_subcommand("validate", "Check a problem's standing conditions");
  add_common(*validate, o);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*run) return cmd_run(o);
    if (*sweep) return cmd_sweep(o);
    if (*audit) return cmd_audit(o);
    return cmd_validate(o);
  } catch (const rtbt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const rtbt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const rtbt::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kConfig;
  } catch (const rtbt::InputError& e) {
    std::cerr << "invalid problem: " << e.what() << '\n';
    return kInvalidProblem;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
