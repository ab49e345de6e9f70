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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degpart/feasibility.hpp"
#include "degpart/graph.hpp"
#include "degpart/patterns.hpp"
#include "degpart/solver.hpp"

namespace degpart {

/// A graph with demands, the external labels of its vertices and free-form
/// metadata. Warnings raised while parsing are kept in `meta` under "warning".
struct Instance {
  Graph graph;
  DemandPair demands;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> meta;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct ParseOptions {
  /// Applied to every vertex before any `d` line.
  std::optional<std::pair<std::int64_t, std::int64_t>> default_demands;
};

/// Line format:
///
///     # comment
///     p <n>
///     m <key> <value...>
///     e <u> <v>
///     d <u>|* <a> <b>
///
/// If every vertex token is a decimal integer the tokens are ids in [0, n).
/// Otherwise all tokens are labels, assigned ids in first-seen order.
Instance parse_instance(std::string_view text, const ParseOptions& options = {});
Instance read_instance_file(const std::filesystem::path& path, const ParseOptions& options = {});

/// Canonical rendering; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);
void write_instance_file(const std::filesystem::path& path, const Instance& instance);

/// Instance whose labels are the decimal ids.
Instance make_instance(Graph graph, DemandPair demands);

enum class OutputFormat { Text, Json };

std::string serialize_outcome(const SolveOutcome& outcome, OutputFormat format);
std::string serialize_hypotheses(const HypothesisReport& report, OutputFormat format);
std::string serialize_classification(const Classification& c, OutputFormat format);
std::string serialize_vertex_set(const VertexSet& set, PatternKind kind, OutputFormat format);

}  // namespace degpart
