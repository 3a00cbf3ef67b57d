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

#include "rtbt/trace_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rtbt/errors.hpp"

namespace rtbt {

TraceFormat parse_trace_format(std::string_view text) {
  if (text == "csv") return TraceFormat::kCsv;
  if (text == "table") return TraceFormat::kTable;
  throw ConfigError("unknown trace format '" + std::string(text) + "'");
}

std::string trace_csv_header() {
  return "t,top,stack_len,move,next,gamma,u_before,u_after,lss,updates";
}

namespace {

void check_name(const std::string& name) {
  if (name.find_first_of(",;:\n\r\"") != std::string::npos)
    throw FormatError("state name '" + name + "' cannot be written to a trace");
}

std::string join_states(const ProblemSpec& p, std::span<const StateId> states, char sep) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += sep;
    out += p.name(states[i]);
  }
  return out;
}

std::string emit_csv(const ProblemSpec& p, std::span<const StepRecord> trace) {
  for (StateId s = 0; s < p.size(); ++s) check_name(p.name(s));
  const double eps = p.epsilon();
  std::ostringstream out;
  out << trace_csv_header() << '\n';
  for (const StepRecord& r : trace) {
    out << r.t << ',' << p.name(r.top) << ',' << r.stack_len << ','
        << to_string(r.move, r.excise) << ',' << p.name(r.next_top) << ','
        << format_real(r.gamma) << ',' << format_cost(r.u_before, eps) << ','
        << format_cost(r.u_after, eps) << ',' << join_states(p, r.lss, ';') << ',';
    for (std::size_t i = 0; i < r.changes.size(); ++i) {
      const HeuristicChange& c = r.changes[i];
      if (i) out << ';';
      out << p.name(c.state) << ':' << format_cost(c.before, eps) << ':'
          << format_cost(c.after, eps);
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_table(const ProblemSpec& p, std::span<const StepRecord> trace) {
  if (p.size() > kMaxTableStates)
    throw FormatError("table traces support at most " + std::to_string(kMaxTableStates) +
                      " states, problem has " + std::to_string(p.size()));
  const double eps = p.epsilon();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"t"};
  for (StateId s = 0; s < p.size(); ++s) head.push_back("h(" + p.name(s) + ")");
  head.insert(head.end(), {"stack", "lss", "u"});
  rows.push_back(std::move(head));

  HeuristicTable h(p.h_init());
  StackPath stack(p.start());
  Cost u = Cost::zero();
  for (std::size_t t = 0; t <= trace.size(); ++t) {
    std::vector<std::string> row{std::to_string(t)};
    for (StateId s = 0; s < p.size(); ++s)
      row.push_back(format_cost(h[s], eps) + (s == stack.top() ? "*" : ""));
    row.push_back("[" + join_states(p, stack.states(), ',') + "]");
    row.push_back(t < trace.size() ? "{" + join_states(p, trace[t].lss, ',') + "}" : "-");
    row.push_back(format_cost(u, eps));
    rows.push_back(std::move(row));
    if (t == trace.size()) break;
    const StepRecord& r = trace[t];
    for (const HeuristicChange& c : r.changes) h.set(c.state, c.after);
    u = r.u_after;
    StepDecision d;
    d.move = r.move;
    d.excise = r.excise;
    d.next = r.next_top;
    stack = apply_move(stack, d);
  }

  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(sep, pos);
    out.emplace_back(text.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

std::string emit_trace(const ProblemSpec& problem, std::span<const StepRecord> trace,
                       TraceFormat format) {
  return format == TraceFormat::kCsv ? emit_csv(problem, trace) : emit_table(problem, trace);
}

std::vector<StepRecord> parse_trace_csv(const ProblemSpec& p, std::string_view text) {
  std::vector<StepRecord> out;
  std::size_t line_no = 0;
  const double eps = p.epsilon();
  for (std::string line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != trace_csv_header()) throw ParseError("unexpected trace header", 1, 1);
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 10)
      throw ParseError("expected 10 fields, got " + std::to_string(fields.size()), line_no, 1);
    std::size_t col = 1;
    std::size_t field = 0;
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, line_no, col); };
    auto state = [&](const std::string& name) {
      auto id = p.find(name);
      if (!id) throw fail("unknown state '" + name + "'");
      return *id;
    };
    auto cost = [&](const std::string& text_value) {
      if (text_value == "inf") return Cost::infinity();
      char* end = nullptr;
      const double v = std::strtod(text_value.c_str(), &end);
      if (text_value.empty() || *end != '\0') throw fail("bad cost '" + text_value + "'");
      try {
        return quantize(v, eps, "trace value");
      } catch (const InputError& e) {
        throw fail(e.what());
      }
    };
    auto integer = [&](const std::string& text_value) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(text_value.c_str(), &end, 10);
      if (text_value.empty() || *end != '\0') throw fail("bad integer '" + text_value + "'");
      return static_cast<std::uint64_t>(v);
    };
    auto next_field = [&]() -> const std::string& {
      if (field) col += fields[field - 1].size() + 1;
      return fields[field++];
    };

    StepRecord r;
    r.t = integer(next_field());
    r.top = state(next_field());
    r.stack_len = static_cast<std::size_t>(integer(next_field()));
    const std::string& move = next_field();
    if (move == "forward") {
      r.move = Move::kForward;
    } else if (move == "forward-excise") {
      r.move = Move::kForward;
      r.excise = true;
    } else if (move == "backward") {
      r.move = Move::kBackward;
    } else if (move == "stay") {
      r.move = Move::kStay;
    } else {
      throw fail("unknown move '" + move + "'");
    }
    r.next_top = state(next_field());
    {
      const std::string& g = next_field();
      char* end = nullptr;
      r.gamma = std::strtod(g.c_str(), &end);
      if (g.empty() || *end != '\0') throw fail("bad gamma '" + g + "'");
    }
    r.u_before = cost(next_field());
    r.u_after = cost(next_field());
    const std::string& lss = next_field();
    if (!lss.empty()) {
      std::vector<StateId> ids;
      for (const auto& name : split(lss, ';')) ids.push_back(state(name));
      r.lss = make_state_set(std::move(ids));
    }
    const std::string& updates = next_field();
    if (!updates.empty()) {
      for (const auto& item : split(updates, ';')) {
        const auto parts = split(item, ':');
        if (parts.size() != 3) throw fail("bad update '" + item + "'");
        r.changes.push_back({state(parts[0]), cost(parts[1]), cost(parts[2])});
      }
    }
    out.push_back(std::move(r));
  }
  if (line_no == 0 || (line_no == 1 && text.empty()))
    throw ParseError("empty trace", 1, 1);
  return out;
}

ReplayResult replay_trace(const ProblemSpec& problem, const AlgoParams& params,
                          std::span<const StepRecord> trace) {
  const DistanceOracle oracle(problem);
  const SearchContext ctx{problem, oracle, params};
  ReplayResult out;
  AgentState state = initial_state(problem);
  for (const StepRecord& r : trace) {
    const std::string at = "t=" + std::to_string(r.t) + ": ";
    if (r.t != state.t) out.errors.push_back(at + "expected t=" + std::to_string(state.t));
    if (r.top != state.stack.top())
      out.errors.push_back(at + "top is " + problem.name(state.stack.top()) + ", record says " +
                           problem.name(r.top));
    if (r.stack_len != state.stack.size())
      out.errors.push_back(at + "stack length mismatch");
    if (r.u_before != state.u) out.errors.push_back(at + "u_before mismatch");

    StepDecision d;
    d.move = r.move;
    d.excise = r.excise;
    d.next = r.move == Move::kForward ? r.next_top : kNoState;
    d.lss = r.lss;
    d.gamma = r.gamma;
    AgentState next;
    next.t = state.t + 1;
    next.h = state.h;
    for (const HeuristicChange& c : r.changes) {
      if (c.before != state.h[c.state])
        out.errors.push_back(at + "old h(" + problem.name(c.state) + ") mismatch");
      d.updates.push_back({c.state, c.after});
      next.h.set(c.state, c.after);
    }
    next.u = r.u_after;
    if (r.move == Move::kBackward && state.stack.size() < 2) {
      out.errors.push_back(at + "backward move at the start state");
      break;
    }
    next.stack = apply_move(state.stack, d);
    if (next.stack.top() != r.next_top)
      out.errors.push_back(at + "move does not end at " + problem.name(r.next_top));
    auto v = audit_transition(ctx, state, next, d);
    out.violations.insert(out.violations.end(), v.begin(), v.end());
    state = std::move(next);
  }
  out.final_state = std::move(state);
  return out;
}

}  // namespace rtbt
