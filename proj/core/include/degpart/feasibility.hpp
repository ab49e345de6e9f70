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
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/partition.hpp"

namespace degpart {

/// Upper bound accepted for any single demand value.
inline constexpr std::int64_t kMaxDemand = std::int64_t{1} << 40;

/// Per-vertex demands a(u), b(u).
struct DemandPair {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  static DemandPair uniform(std::size_t n, std::int64_t a_value, std::int64_t b_value);

  std::size_t size() const noexcept { return a.size(); }

  /// Throws InvalidArgument on a length mismatch, a negative value or a value
  /// above kMaxDemand.
  void validate(std::size_t n) const;

  friend bool operator==(const DemandPair&, const DemandPair&) = default;
};

/// h(u) in {0,1}, frozen by a classification before any search.
struct HVector {
  std::vector<std::uint8_t> h;

  static HVector zeros(std::size_t n) { return HVector{std::vector<std::uint8_t>(n, 0)}; }
  static HVector from_set(const VertexSet& t1);

  std::int64_t operator[](Vertex u) const { return h[u]; }
  std::size_t size() const noexcept { return h.size(); }

  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Generic per-vertex degree threshold f.
struct Threshold {
  std::vector<std::int64_t> f;

  static Threshold uniform(std::size_t n, std::int64_t value) {
    return Threshold{std::vector<std::int64_t>(n, value)};
  }
  static Threshold first_side(const DemandPair& d) { return Threshold{d.a}; }
  static Threshold second_side(const DemandPair& d) { return Threshold{d.b}; }

  std::int64_t operator[](Vertex u) const { return f[u]; }
  std::size_t size() const noexcept { return f.size(); }
  Threshold plus(std::int64_t delta) const;
};

enum class Side : std::uint8_t { First = 1, Second = 2 };

constexpr Side other(Side s) noexcept { return s == Side::First ? Side::Second : Side::First; }

/// Threshold whose peeling core decides i-goodness: a+1 on side 1, b+h on side 2.
Threshold good_threshold(Side side, const DemandPair& d, const HVector& h);

/// Side 1: {u in X : d_X(u) <= a(u)}. Side 2: {u in X : d_X(u) <= b(u)+h(u)-1};
/// when b(u)+h(u) == 0 that condition is unsatisfiable and u is never bad.
VertexSet bad_vertices(const Graph& g, const VertexSet& x, Side side, const DemandPair& d,
                       const HVector& h);

/// Largest Y ⊆ X with d_Y(u) >= f(u) for every u in Y. Violators are deleted
/// from an ascending-id worklist; the result does not depend on that order.
VertexSet f_core(const Graph& g, const VertexSet& x, const Threshold& f);

// The predicates below are only defined for non-empty X and throw EmptySet
// otherwise.

bool is_good(const Graph& g, const VertexSet& x, Side side, const DemandPair& d, const HVector& h);
bool is_meager(const Graph& g, const VertexSet& x, Side side, const DemandPair& d, const HVector& h);
bool is_nice(const Graph& g, const VertexSet& x, const Threshold& f);
bool is_degenerate_set(const Graph& g, const VertexSet& x, const Threshold& f);

/// Non-empty, disjoint, A is a-nice and B is b-nice. Never throws.
bool is_feasible_pair(const Graph& g, const VertexSet& a_side, const VertexSet& b_side,
                      const DemandPair& d);

/// Throws NotAPartition when the sides overlap or miss a vertex.
bool is_feasible_partition(const Graph& g, const Partition& p, const DemandPair& d);

/// Grows A greedily (ascending id, repeated passes) by every outside vertex
/// already meeting a(v) inside A, then returns (A, V \ A).
///
/// Requires (A, B) to be a feasible pair and d_G(u) >= a(u) + b(u) for every
/// u; throws PreconditionViolated otherwise. At the fixpoint an outside v has
/// d_A(v) <= a(v) - 1, so it keeps at least b(v) + 1 neighbours in V \ A.
/// The result is re-validated and InternalInvariant is thrown on failure.
Partition extend_pair_to_partition(const Graph& g, const DemandPair& d, const VertexSet& a_side,
                                   const VertexSet& b_side);

}  // namespace degpart
