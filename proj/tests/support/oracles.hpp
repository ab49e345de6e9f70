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

// Brute-force reference implementations used only by tests. None of these
// call the peeling, detector or solver code they are compared against.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "degpart/feasibility.hpp"
#include "degpart/generate.hpp"
#include "degpart/graph.hpp"
#include "degpart/patterns.hpp"

namespace degpart::testing {

/// Labeled graph number `code` on n vertices: bit k set <=> k-th pair (i<j,
/// lexicographic) is an edge.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++k) {
      if ((code >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::build(n, edges);
}

inline std::uint64_t labeled_graph_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline Graph complete_graph(std::size_t n) { return generate_graph(n, 1.0, 0); }

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::build(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

/// Three triangles on spine 0-1 with pages 2, 3, 4.
inline Graph book_graph() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}); }

inline Graph k23_graph() { return build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

/// K4 on 0..3 with pendant vertex 4 attached to 0.
inline Graph k4_pendant() { return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }

inline std::int64_t count_in(const Graph& g, Vertex u, const std::vector<char>& member) {
  std::int64_t k = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (member[v] && g.adjacent(u, v)) ++k;
  }
  return k;
}

/// Peels violators chosen uniformly at random.
inline VertexSet random_order_core(const Graph& g, const VertexSet& x, const Threshold& f, Rng& rng) {
  std::vector<char> alive(g.order(), 0);
  x.for_each([&](Vertex u) { alive[u] = 1; });
  while (true) {
    std::vector<Vertex> violators;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (alive[u] && count_in(g, u, alive) < f[u]) violators.push_back(u);
    }
    if (violators.empty()) break;
    alive[violators[uniform_below(rng, violators.size())]] = 0;
  }
  VertexSet out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (alive[u]) out.insert(u);
  }
  return out;
}

/// Every non-empty subset of X has a vertex with d_{X'}(u) < f(u) (subset
/// enumeration; |X| <= 16).
inline bool every_subset_has_violator(const Graph& g, const VertexSet& x, const Threshold& f) {
  const auto members = x.to_vector();
  const std::uint32_t total = 1U << members.size();
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<char> in(g.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) in[members[i]] = 1;
    }
    bool has_violator = false;
    for (std::size_t i = 0; i < members.size() && !has_violator; ++i) {
      if (in[members[i]] && count_in(g, members[i], in) < f[members[i]]) has_violator = true;
    }
    if (!has_violator) return false;
  }
  return true;
}

/// Ground-truth existence via per-vertex side vectors and plain counting.
inline bool feasible_partition_exists(const Graph& g, const DemandPair& d) {
  const std::size_t n = g.order();
  if (n < 2) return false;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<char> first(n), second(n);
    for (std::size_t u = 0; u < n; ++u) {
      first[u] = static_cast<char>((mask >> u) & 1U);
      second[u] = static_cast<char>(!first[u]);
    }
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      ok = first[u] ? count_in(g, u, first) >= d.a[u] : count_in(g, u, second) >= d.b[u];
    }
    if (ok) return true;
  }
  return false;
}

/// S1 by listing every vertex sequence of length 3 or 4 that closes into a
/// cycle and grouping by its first ordered pair.
inline VertexSet s1_by_sequences(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::set<std::vector<Vertex>>> sets(n * n);
  std::vector<Vertex> seq;
  auto record = [&] {
    std::vector<Vertex> key = seq;
    std::sort(key.begin(), key.end());
    sets[seq[0] * n + seq[1]].insert(key);
  };
  auto extend = [&](auto&& self, std::size_t target) -> void {
    if (seq.size() == target) {
      if (g.adjacent(seq.back(), seq.front())) record();
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(seq.begin(), seq.end(), v) != seq.end() || !g.adjacent(seq.back(), v)) continue;
      seq.push_back(v);
      self(self, target);
      seq.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    for (const std::size_t len : {3u, 4u}) {
      seq = {s};
      extend(extend, len);
    }
  }
  VertexSet out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (sets[u * n + v].size() >= 2) {
        out.insert(u);
        out.insert(v);
      }
    }
  }
  return out;
}

/// Five-vertex pattern graphs on positions 0..4. The book-type family is K4-e
/// on 0..3 (edge 2-3 missing) plus vertex 4 joined to two of 0..3; `strict`
/// keeps only the attachment to 0 and 1.
inline std::vector<std::vector<std::pair<int, int>>> pattern_family(PatternKind kind, bool strict) {
  if (kind == PatternKind::K23) return {{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}};
  const std::vector<std::pair<int, int>> k4e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (strict && !(i == 0 && j == 1)) continue;
      auto edges = k4e;
      edges.emplace_back(i, 4);
      edges.emplace_back(j, 4);
      out.push_back(edges);
    }
  }
  return out;
}

/// Vertices covered by some (not necessarily induced) copy of a pattern in
/// the family, by trying every injective map of the five positions.
inline VertexSet pattern_cover(const Graph& g, PatternKind kind, bool strict) {
  const std::size_t n = g.order();
  VertexSet out(n);
  if (n < 5) return out;
  const auto family = pattern_family(kind, strict);
  std::vector<Vertex> pick;
  auto choose = [&](auto&& self, Vertex from) -> void {
    if (pick.size() == 5) {
      std::vector<Vertex> perm = pick;
      do {
        for (const auto& edges : family) {
          bool ok = true;
          for (const auto& [x, y] : edges) {
            if (!g.adjacent(perm[x], perm[y])) {
              ok = false;
              break;
            }
          }
          if (ok) {
            for (Vertex v : perm) out.insert(v);
            return;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  choose(choose, 0);
  return out;
}

/// Random subset where each vertex joins with probability 1/2.
inline VertexSet random_subset(std::size_t n, Rng& rng) {
  VertexSet s(n);
  for (Vertex u = 0; u < n; ++u) {
    if (rng() & 1U) s.insert(u);
  }
  return s;
}

inline DemandPair random_demands(std::size_t n, std::int64_t max_value, Rng& rng) {
  DemandPair d = DemandPair::uniform(n, 0, 0);
  for (std::size_t u = 0; u < n; ++u) {
    d.a[u] = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_value + 1)));
    d.b[u] = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_value + 1)));
  }
  return d;
}

/// Graph with a feasible pair (A, B) planted by choosing demands no larger
/// than the internal degrees, and d_G >= a + b everywhere.
struct PlantedPair {
  Graph graph;
  DemandPair demands;
  VertexSet a_side;
  VertexSet b_side;
};

inline PlantedPair plant_feasible_pair(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  PlantedPair out;
  out.graph = generate_graph(n, p, rng());
  const Graph& g = out.graph;
  out.a_side = VertexSet(n);
  out.b_side = VertexSet(n);
  std::vector<Vertex> ids(n);
  for (Vertex u = 0; u < n; ++u) ids[u] = u;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(ids[i], ids[uniform_below(rng, i + 1)]);
  const std::size_t a_count = 1 + uniform_below(rng, n - 1);
  const std::size_t b_count = 1 + uniform_below(rng, n - a_count);
  for (std::size_t i = 0; i < a_count; ++i) out.a_side.insert(ids[i]);
  for (std::size_t i = a_count; i < a_count + b_count; ++i) out.b_side.insert(ids[i]);

  out.demands = DemandPair::uniform(n, 0, 0);
  auto pick = [&](std::int64_t hi) { return static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi + 1))); };
  for (Vertex u = 0; u < n; ++u) {
    const auto deg = static_cast<std::int64_t>(g.degree(u));
    if (out.a_side.contains(u)) {
      out.demands.a[u] = pick(static_cast<std::int64_t>(g.degree_in(u, out.a_side)));
      out.demands.b[u] = pick(deg - out.demands.a[u]);
    } else if (out.b_side.contains(u)) {
      out.demands.b[u] = pick(static_cast<std::int64_t>(g.degree_in(u, out.b_side)));
      out.demands.a[u] = pick(deg - out.demands.b[u]);
    } else {
      out.demands.a[u] = pick(deg);
      out.demands.b[u] = pick(deg - out.demands.a[u]);
    }
  }
  return out;
}

}  // namespace degpart::testing
