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

#include "degpart/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "degpart/error.hpp"

namespace degpart {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw Error(Errc::InvalidArgument, "vertex count " + std::to_string(n) + " too large");
  }
  Graph g;
  g.rows_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw Error(Errc::LoopEdge, "self-loop at vertex " + std::to_string(u));
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
  }
  g.lists_.resize(n);
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    g.lists_[u] = g.rows_[u].to_vector();
    degree_sum += g.lists_[u].size();
  }
  g.m_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex u) const {
  if (u >= order()) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(u) + " outside graph of order " + std::to_string(order()));
  }
}

const VertexSet& Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return rows_[u];
}

std::span<const Vertex> Graph::neighbor_list(Vertex u) const {
  check_vertex(u);
  return lists_[u];
}

std::size_t Graph::degree(Vertex u) const {
  check_vertex(u);
  return lists_[u].size();
}

std::size_t Graph::degree_in(Vertex u, const VertexSet& x) const {
  check_vertex(u);
  const auto& list = lists_[u];
  if (list.size() * 64 >= rows_[u].universe()) return rows_[u].intersection_size(x);
  std::size_t k = 0;
  for (const Vertex v : list) k += x.contains(v) ? 1 : 0;
  return k;
}

std::size_t Graph::edges_within(const VertexSet& x) const {
  std::size_t twice = 0;
  x.for_each([&](Vertex u) {
    if (u < order()) twice += degree_in(u, x);
  });
  return twice / 2;
}

int Graph::edge_indicator(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SameVertex, "edge_indicator needs distinct vertices, got " + std::to_string(u));
  return rows_[u].contains(v) ? 1 : 0;
}

std::size_t Graph::min_degree() const {
  if (order() == 0) throw Error(Errc::EmptyGraph, "minimum degree of the empty graph");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& list : lists_) best = std::min(best, list.size());
  return best;
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& x) const {
  if (x.empty()) throw Error(Errc::EmptySet, "induced subgraph on the empty set");
  InducedSubgraph sub;
  sub.original = x.to_vector();
  if (sub.original.back() >= order()) check_vertex(sub.original.back());
  std::vector<Vertex> local(order(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < sub.original.size(); ++i) local[sub.original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> kept;
  for (const Vertex u : sub.original) {
    for (const Vertex v : lists_[u]) {
      if (u < v && x.contains(v)) kept.emplace_back(local[u], local[v]);
    }
  }
  sub.graph = Graph::build(sub.original.size(), kept);
  return sub;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < order(); ++u) {
    for (const Vertex v : lists_[u]) {
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

}  // namespace degpart
