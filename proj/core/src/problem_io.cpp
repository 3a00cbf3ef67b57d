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

#include "rtbt/problem_io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "rtbt/errors.hpp"

namespace rtbt {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(begin, i - begin)), begin + 1});
  }
  return out;
}

double parse_number(const Token& tok, std::size_t line) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw ParseError("expected a number, got '" + tok.text + "'", line, tok.column);
  return v;
}

struct PendingState {
  std::size_t line;
  Token h;
};

struct PendingEdge {
  std::size_t line;
  Token from;
  Token to;
  Token weight;
  bool undirected;
};

}  // namespace

ProblemSpec parse_problem_text(std::string_view text) {
  double epsilon = 1.0;
  double theta = 1.0;
  std::vector<std::pair<std::string, PendingState>> states;
  std::map<std::string, std::size_t> declared;
  std::vector<PendingEdge> edges;
  std::vector<std::pair<std::size_t, Token>> goals;
  std::optional<std::pair<std::size_t, Token>> start;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0].text;
    auto arity = [&](std::size_t n) {
      if (toks.size() != n + 1)
        throw ParseError("'" + key + "' takes " + std::to_string(n) + " argument(s)", line_no,
                         toks.size() > n + 1 ? toks[n + 1].column : line.size() + 1);
    };
    if (key == "epsilon") {
      arity(1);
      epsilon = parse_number(toks[1], line_no);
      if (!(epsilon > 0.0)) throw ParseError("epsilon must be positive", line_no, toks[1].column);
    } else if (key == "theta") {
      arity(1);
      theta = parse_number(toks[1], line_no);
    } else if (key == "state") {
      arity(2);
      if (!declared.emplace(toks[1].text, states.size()).second)
        throw ParseError("state '" + toks[1].text + "' declared twice", line_no, toks[1].column);
      states.push_back({toks[1].text, {line_no, toks[2]}});
    } else if (key == "edge" || key == "uedge") {
      arity(3);
      edges.push_back({line_no, toks[1], toks[2], toks[3], key == "uedge"});
    } else if (key == "goal") {
      arity(1);
      goals.emplace_back(line_no, toks[1]);
    } else if (key == "start") {
      arity(1);
      if (start) throw ParseError("start given twice", line_no, toks[0].column);
      start.emplace(line_no, toks[1]);
    } else {
      throw ParseError("unknown keyword '" + key + "'", line_no, toks[0].column);
    }
  }

  auto resolve = [&](const Token& tok, std::size_t line) {
    if (!declared.count(tok.text))
      throw ParseError("undeclared state '" + tok.text + "'", line, tok.column);
    return tok.text;
  };
  auto quantum = [&](const Token& tok, std::size_t line, const std::string& what) {
    try {
      return quantize(parse_number(tok, line), epsilon, what);
    } catch (const InputError& e) {
      throw ParseError(e.what(), line, tok.column);
    }
  };

  ProblemBuilder b(epsilon, theta);
  for (const auto& [name, st] : states) b.add_state(name, quantum(st.h, st.line, "h(" + name + ")"));
  for (const auto& e : edges) {
    const std::string from = resolve(e.from, e.line);
    const std::string to = resolve(e.to, e.line);
    const Cost w = quantum(e.weight, e.line, "weight");
    if (w <= Cost::zero()) throw ParseError("edge weight must be positive", e.line, e.weight.column);
    if (e.undirected)
      b.add_undirected_edge(from, to, w);
    else
      b.add_edge(from, to, w);
  }
  for (const auto& [line, tok] : goals) b.add_goal(resolve(tok, line));
  if (!start) throw ParseError("missing 'start'", line_no, 1);
  b.set_start(resolve(start->second, start->first));
  if (goals.empty()) throw ParseError("missing 'goal'", line_no, 1);
  try {
    return b.build();
  } catch (const InputError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string format_problem_text(const ProblemSpec& p) {
  std::ostringstream out;
  const double eps = p.epsilon();
  for (StateId s = 0; s < p.size(); ++s)
    if (p.name(s).find_first_of(" \t\r\n#") != std::string::npos)
      throw FormatError("state name '" + p.name(s) + "' cannot be written in the text format");
  out << "epsilon " << format_real(eps) << '\n';
  out << "theta " << format_real(p.theta()) << '\n';
  for (StateId s = 0; s < p.size(); ++s)
    out << "state " << p.name(s) << ' ' << format_cost(p.h_init()[s], eps) << '\n';
  for (StateId s = 0; s < p.size(); ++s)
    for (const Edge& e : p.successors(s))
      out << "edge " << p.name(s) << ' ' << p.name(e.to) << ' ' << format_cost(e.weight, eps)
          << '\n';
  for (StateId g : p.goals()) out << "goal " << p.name(g) << '\n';
  out << "start " << p.name(p.start()) << '\n';
  return out.str();
}

}  // namespace rtbt
