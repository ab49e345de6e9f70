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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "degpart/feasibility.hpp"
#include "degpart/graph.hpp"
#include "degpart/partition.hpp"
#include "degpart/patterns.hpp"

namespace degpart {

/// ω(X1,X2) = e(X1) + e(X2) + Σ_{X1} b + Σ_{X2} a. Throws NotAPartition.
std::int64_t weight(const Graph& g, const DemandPair& d, const Partition& p);

/// Exact change of ω when u crosses to `to`. Throws WrongSide unless u is
/// currently on the other side.
std::int64_t delta_move(const Graph& g, const DemandPair& d, const Partition& p, Vertex u, Side to);

/// Exact change of ω when u ∈ X1 and v ∈ X2 trade sides.
std::int64_t delta_swap(const Graph& g, const DemandPair& d, const Partition& p, Vertex u, Vertex v);

/// Looks for a feasible pair using peeling cores of the two sides and of the
/// sides with one bad vertex carried across. The returned pair is checked.
std::optional<VertexPair> extract_feasible_pair(const Graph& g, const DemandPair& d, const HVector& h,
                                                const Partition& p);

/// Heuristic starting point: an inclusion-minimal 2-good set inside V minus a
/// maximum-degree vertex, with the rest on side 1. Falls back to a seeded
/// balanced split when no 2-good set exists. Throws TooSmall for n < 2.
Partition degenerate_init(const Graph& g, const DemandPair& d, const HVector& h, std::uint64_t seed = 0);

/// (m + Σ(a+b) + 1) · (n + 1): the number of distinct values the
/// lexicographic potential (ω, -|X1|) can take.
std::uint64_t potential_bound(const Graph& g, const DemandPair& d);

struct Move {
  enum class Kind : std::uint8_t { ToSecond, ToFirst, Swap };
  Kind kind = Kind::ToSecond;
  Vertex u = 0;
  Vertex v = 0;  // only meaningful for Swap
  std::int64_t delta = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

struct LocalSearchOptions {
  /// Maximum applied moves; 0 selects 10 · potential_bound.
  std::uint64_t budget = 0;
  /// ω-neutral swaps permitted once no strict improvement remains.
  std::size_t allow_neutral_swaps = 0;
};

struct SearchState {
  Partition partition;
  std::int64_t omega = 0;
  std::vector<Move> trace;
  std::optional<VertexPair> pair;
  std::size_t neutral_swaps = 0;
  bool budget_exhausted = false;
};

/// First-improvement search over (ω, -|X1|) in ascending id order:
/// bad side-1 vertex to side 2, bad side-2 vertex to side 1, then swaps of a
/// bad pair. Single moves never empty a side. A pair extraction is attempted
/// before the first move, after every move, and at the fixpoint; the search
/// returns as soon as one succeeds.
SearchState local_search(const Graph& g, const DemandPair& d, const HVector& h, Partition init,
                         const LocalSearchOptions& options = {});

inline constexpr std::size_t kDefaultOracleLimit = 24;

struct OracleResult {
  std::optional<Partition> partition;
  std::uint64_t assignments_checked = 0;
};

/// Brute force over all two-sided assignments. When a == b pointwise only
/// assignments with vertex 0 on side 1 are tried. Throws TooLarge when
/// n > limit (the limit itself is capped at 62).
OracleResult exhaustive_oracle(const Graph& g, const DemandPair& d, std::size_t limit = kDefaultOracleLimit);

enum class SolveStatus { Found, NoneExists, Unknown };

std::string_view status_name(SolveStatus status) noexcept;

struct SolveConfig {
  PatternKind pattern = PatternKind::BookB3;
  B3Variant b3_variant = B3Variant::Loose;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::size_t restarts = 8;
  std::size_t oracle_limit = kDefaultOracleLimit;
  bool use_oracle = true;
  std::size_t allow_neutral_swaps = 0;
};

struct SolveStats {
  std::uint64_t moves = 0;
  std::size_t restarts = 0;
  bool oracle_used = false;
  bool found_by_local_search = false;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Partition> partition;
  std::int64_t omega = 0;
  SolveStats stats;
  HypothesisReport hypothesis;
  /// Main(i) or Main(ii) holds and yet no feasible partition exists.
  bool theorem_violation = false;
};

/// Local search from degenerate_init and seeded random restarts, pair
/// extension, then the exhaustive oracle when n fits. Every Found partition is
/// re-validated. Throws TooSmall for n < 2 and UnsupportedKind for
/// CyclePairS1.
SolveOutcome solve(const Graph& g, const DemandPair& d, const SolveConfig& config = {});

}  // namespace degpart
