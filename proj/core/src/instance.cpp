/*
 * Copyright 2026 The degpart Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "degpart/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "degpart/error.hpp"

namespace degpart {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

bool is_decimal(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint64_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (!is_decimal(token) || ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
  }
  return value;
}

std::int64_t parse_demand(const std::string& token, std::size_t line) {
  const std::uint64_t value = parse_count(token, line, "a demand");
  if (value > static_cast<std::uint64_t>(kMaxDemand)) throw ParseError(line, "demand " + token + " exceeds 2^40");
  return static_cast<std::int64_t>(value);
}

bool numeric_labels(const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != std::to_string(i)) return false;
  }
  return true;
}

bool uniform(const DemandPair& d) {
  return std::adjacent_find(d.a.begin(), d.a.end(), std::not_equal_to<>()) == d.a.end() &&
         std::adjacent_find(d.b.begin(), d.b.end(), std::not_equal_to<>()) == d.b.end();
}

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& options) {
  std::optional<std::size_t> declared;
  std::vector<Line> edge_lines;
  std::vector<Line> demand_lines;
  Instance inst;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, stop - start);
    start = stop + 1;
    ++number;
    auto tokens = tokenize(raw);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (stop == text.size()) break;
      continue;
    }
    const std::string directive = tokens.front();
    if (directive == "p") {
      if (declared) throw ParseError(number, "duplicate 'p' line");
      if (tokens.size() != 2) throw ParseError(number, "expected 'p <n>'");
      if (!edge_lines.empty() || !demand_lines.empty()) throw ParseError(number, "'p' must precede 'e' and 'd' lines");
      const std::uint64_t n = parse_count(tokens[1], number, "the vertex count");
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(number, "vertex count too large");
      declared = static_cast<std::size_t>(n);
    } else if (directive == "m") {
      if (tokens.size() < 2) throw ParseError(number, "expected 'm <key> <value...>'");
      std::string value;
      for (std::size_t i = 2; i < tokens.size(); ++i) value += (i > 2 ? " " : "") + tokens[i];
      inst.meta.emplace_back(tokens[1], value);
    } else if (directive == "e") {
      if (tokens.size() != 3) throw ParseError(number, "expected 'e <u> <v>'");
      edge_lines.push_back({number, {tokens[1], tokens[2]}});
    } else if (directive == "d") {
      if (tokens.size() != 4) throw ParseError(number, "expected 'd <u>|* <a> <b>'");
      demand_lines.push_back({number, {tokens[1], tokens[2], tokens[3]}});
    } else {
      throw ParseError(number, "unknown directive '" + directive + "'");
    }
    if (stop == text.size()) break;
  }
  if (!declared) throw ParseError(1, "missing 'p <n>' line");
  const std::size_t n = *declared;

  bool numeric = true;
  for (const auto& line : edge_lines) numeric = numeric && is_decimal(line.tokens[0]) && is_decimal(line.tokens[1]);
  for (const auto& line : demand_lines) numeric = numeric && (line.tokens[0] == "*" || is_decimal(line.tokens[0]));

  std::map<std::string, Vertex> ids;
  auto resolve = [&](const std::string& token, std::size_t line) -> Vertex {
    if (numeric) {
      const std::uint64_t id = parse_count(token, line, "a vertex");
      if (id >= n) throw ParseError(line, "vertex " + token + " outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      return static_cast<Vertex>(id);
    }
    if (token == "*") throw ParseError(line, "'*' is not a vertex label");
    auto it = ids.find(token);
    if (it != ids.end()) return it->second;
    if (inst.labels.size() >= n) {
      throw ParseError(line, "label '" + token + "' exceeds the " + std::to_string(n) + " declared vertices");
    }
    const auto id = static_cast<Vertex>(inst.labels.size());
    ids.emplace(token, id);
    inst.labels.push_back(token);
    return id;
  };

  // Labels are assigned in line order across 'e' and 'd' lines.
  std::vector<const Line*> ordered;
  for (const auto& line : edge_lines) ordered.push_back(&line);
  for (const auto& line : demand_lines) ordered.push_back(&line);
  std::sort(ordered.begin(), ordered.end(), [](const Line* x, const Line* y) { return x->number < y->number; });

  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> demand(n, options.default_demands);
  for (const Line* line : ordered) {
    const bool is_edge = line->tokens.size() == 2;
    if (is_edge) {
      const Vertex u = resolve(line->tokens[0], line->number);
      const Vertex v = resolve(line->tokens[1], line->number);
      if (u == v) throw ParseError(line->number, "self-loop at '" + line->tokens[0] + "'");
      const Edge key{std::min(u, v), std::max(u, v)};
      if (!seen.insert(key).second) {
        inst.meta.emplace_back("warning", "line " + std::to_string(line->number) + ": duplicate edge " +
                                              line->tokens[0] + " " + line->tokens[1]);
        continue;
      }
      edges.push_back(key);
    } else {
      const std::pair<std::int64_t, std::int64_t> value{parse_demand(line->tokens[1], line->number),
                                                        parse_demand(line->tokens[2], line->number)};
      if (line->tokens[0] == "*") {
        std::fill(demand.begin(), demand.end(), value);
      } else {
        demand[resolve(line->tokens[0], line->number)] = value;
      }
    }
  }

  if (numeric) {
    inst.labels.clear();
    for (std::size_t i = 0; i < n; ++i) inst.labels.push_back(std::to_string(i));
  } else {
    for (std::size_t i = inst.labels.size(); i < n; ++i) {
      const std::string label = std::to_string(i);
      if (ids.contains(label)) throw ParseError(1, "unlabelled vertex " + label + " collides with a label");
      inst.labels.push_back(label);
    }
  }

  inst.demands = DemandPair::uniform(n, 0, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (!demand[u]) {
      throw Error(Errc::MissingDemands, "no demands for vertex '" + inst.labels[u] + "' (add 'd' lines or defaults)");
    }
    inst.demands.a[u] = demand[u]->first;
    inst.demands.b[u] = demand[u]->second;
  }
  inst.graph = Graph::build(n, edges);
  return inst;
}

Instance read_instance_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), options);
}

std::string serialize_instance(const Instance& inst) {
  const std::size_t n = inst.graph.order();
  inst.demands.validate(n);
  if (inst.labels.size() != n) throw Error(Errc::InvalidArgument, "label table does not match the vertex count");
  const bool numeric = numeric_labels(inst.labels);
  if (!numeric) {
    bool any_textual = false;
    std::set<std::string> distinct;
    for (const auto& label : inst.labels) {
      if (label.empty() || label == "*" || tokenize(label).size() != 1 || label.front() == '#') {
        throw Error(Errc::InvalidArgument, "label '" + label + "' cannot be written to an instance file");
      }
      any_textual = any_textual || !is_decimal(label);
      distinct.insert(label);
    }
    if (!any_textual || distinct.size() != n) {
      throw Error(Errc::InvalidArgument, "labels must be distinct and include a non-numeric label");
    }
  }

  std::ostringstream out;
  out << "p " << n << '\n';
  for (const auto& [key, value] : inst.meta) {
    out << "m " << key;
    if (!value.empty()) out << ' ' << value;
    out << '\n';
  }
  if (numeric && uniform(inst.demands) && n > 0) {
    out << "d * " << inst.demands.a[0] << ' ' << inst.demands.b[0] << '\n';
  } else {
    // Per-vertex lines in id order also pin the first-seen label order.
    for (std::size_t u = 0; u < n; ++u) {
      out << "d " << inst.labels[u] << ' ' << inst.demands.a[u] << ' ' << inst.demands.b[u] << '\n';
    }
  }
  for (const auto& [u, v] : inst.graph.edges()) out << "e " << inst.labels[u] << ' ' << inst.labels[v] << '\n';
  return out.str();
}

void write_instance_file(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write instance file " + path.string());
  out << serialize_instance(instance);
}

Instance make_instance(Graph graph, DemandPair demands) {
  Instance inst;
  demands.validate(graph.order());
  for (std::size_t i = 0; i < graph.order(); ++i) inst.labels.push_back(std::to_string(i));
  inst.graph = std::move(graph);
  inst.demands = std::move(demands);
  return inst;
}

}  // namespace degpart
