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
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "degpart/vertex_set.hpp"

namespace degpart {

using Edge = std::pair<Vertex, Vertex>;

struct InducedSubgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held twice: as a bitset row per vertex (for set-relative
/// degree counts) and as a sorted neighbour list (for iteration).
class Graph {
 public:
  Graph() = default;

  /// Deduplicates parallel and reversed pairs. Throws LoopEdge on u == v and
  /// VertexOutOfRange when an endpoint is >= n.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  const VertexSet& neighbors(Vertex u) const;
  std::span<const Vertex> neighbor_list(Vertex u) const;
  std::size_t degree(Vertex u) const;

  /// |N(u) ∩ X|. u itself need not be a member of X.
  std::size_t degree_in(Vertex u, const VertexSet& x) const;

  /// Number of edges with both ends in X.
  std::size_t edges_within(const VertexSet& x) const;

  /// 1 if uv is an edge, 0 otherwise. Throws SameVertex on u == v.
  int edge_indicator(Vertex u, Vertex v) const;

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return u < rows_.size() && rows_[u].contains(v);
  }

  /// Throws EmptyGraph when n == 0.
  std::size_t min_degree() const;

  InducedSubgraph induced_subgraph(const VertexSet& x) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph& lhs, const Graph& rhs) { return lhs.rows_ == rhs.rows_; }

 private:
  void check_vertex(Vertex u) const;

  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t m_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the id in the parent graph of vertex i of `graph`.
  std::vector<Vertex> original;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::build(n, edges); }

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

}  // namespace degpart
