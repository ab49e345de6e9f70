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

#include "degpart/patterns.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "degpart/error.hpp"

namespace degpart {

std::string_view pattern_name(PatternKind kind) noexcept {
  switch (kind) {
    case PatternKind::BookB3: return "b3";
    case PatternKind::K23: return "k23";
    case PatternKind::CyclePairS1: return "s1";
  }
  return "?";
}

std::string_view b3_variant_name(B3Variant variant) noexcept {
  return variant == B3Variant::Strict ? "strict" : "loose";
}

namespace {

// K4-e on spine p-q with wings r,s; a fifth vertex joined to {r,s} or to one
// spine and one wing vertex.
void mark_loose_attachments(const Graph& g, Vertex p, Vertex q, const VertexSet& common, VertexSet& out,
                            VertexSet& scratch) {
  const auto wings = common.to_vector();
  auto attach = [&](Vertex x, Vertex y, Vertex r, Vertex s) {
    scratch = g.neighbors(x);
    scratch &= g.neighbors(y);
    for (const Vertex c : {p, q, r, s}) scratch.erase(c);
    if (scratch.empty()) return;
    out |= scratch;
    for (const Vertex c : {p, q, r, s}) out.insert(c);
  };
  for (std::size_t i = 0; i < wings.size(); ++i) {
    for (std::size_t j = i + 1; j < wings.size(); ++j) {
      const Vertex r = wings[i];
      const Vertex s = wings[j];
      attach(r, s, r, s);
      for (const Vertex x : {p, q}) {
        for (const Vertex y : {r, s}) attach(x, y, r, s);
      }
    }
  }
}

using PatternEdges = std::vector<std::pair<int, int>>;

// Five pattern vertices 0..4.
const PatternEdges& book_edges() {
  static const PatternEdges e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}};
  return e;
}
const PatternEdges& k23_edges() {
  static const PatternEdges e{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
  return e;
}
// K4-e is 0-1 spine with wings 2,3; vertex 4 joined to the wings.
const PatternEdges& wing_attached_edges() {
  static const PatternEdges e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 2}, {4, 3}};
  return e;
}
// Vertex 4 joined to spine vertex 0 and wing 2.
const PatternEdges& mixed_attached_edges() {
  static const PatternEdges e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 0}, {4, 2}};
  return e;
}

bool embeds_covering(const Graph& g, const PatternEdges& edges, Vertex target) {
  const std::size_t n = g.order();
  if (n < 5) return false;
  std::array<Vertex, 5> image{};
  std::vector<char> taken(n, 0);

  // Plain recursion over ordered 5-tuples of distinct vertices.
  auto place = [&](auto&& self, int depth) -> bool {
    if (depth == 5) {
      bool covers = false;
      for (int i = 0; i < 5; ++i) covers = covers || image[i] == target;
      if (!covers) return false;
      for (const auto& [i, j] : edges) {
        if (!g.adjacent(image[i], image[j])) return false;
      }
      return true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (taken[v] != 0) continue;
      taken[v] = 1;
      image[depth] = v;
      const bool hit = self(self, depth + 1);
      taken[v] = 0;
      if (hit) return true;
    }
    return false;
  };
  return place(place, 0);
}

TheoremCheck finish(VertexSet failing, std::vector<std::string> reasons) {
  TheoremCheck check;
  check.holds = reasons.empty();
  check.failing = std::move(failing);
  std::ostringstream text;
  for (std::size_t i = 0; i < reasons.size(); ++i) text << (i ? "; " : "") << reasons[i];
  check.reason = check.holds ? "ok" : text.str();
  return check;
}

std::string count_phrase(std::size_t k, const char* condition) {
  return std::to_string(k) + (k == 1 ? " vertex fails " : " vertices fail ") + condition;
}

}  // namespace

VertexSet classify_book_b3(const Graph& g, B3Variant variant) {
  VertexSet t1(g.order());
  VertexSet common(g.order());
  VertexSet scratch(g.order());
  for (const auto& [u, v] : g.edges()) {
    common = g.neighbors(u);
    common &= g.neighbors(v);
    const std::size_t k = common.size();
    if (k >= 3) {
      t1 |= common;
      t1.insert(u);
      t1.insert(v);
    }
    if (variant == B3Variant::Loose && k >= 2) mark_loose_attachments(g, u, v, common, t1, scratch);
  }
  return t1;
}

VertexSet classify_k23(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet t1(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (common.size() >= 3) {
        t1 |= common;
        t1.insert(u);
        t1.insert(v);
      }
    }
  }
  return t1;
}

VertexSet s1_vertices(const Graph& g) {
  VertexSet s1(g.order());
  for (const auto& [u, v] : g.edges()) {
    const std::size_t triangles = (g.neighbors(u) & g.neighbors(v)).size();
    std::size_t distinct = triangles;
    std::set<std::pair<Vertex, Vertex>> quads;
    for (const Vertex x : g.neighbor_list(u)) {
      if (distinct >= 2) break;
      if (x == v) continue;
      for (const Vertex y : g.neighbor_list(v)) {
        if (y == u || y == x || !g.adjacent(x, y)) continue;
        if (quads.emplace(std::min(x, y), std::max(x, y)).second && ++distinct >= 2) break;
      }
    }
    if (distinct >= 2) {
      s1.insert(u);
      s1.insert(v);
    }
  }
  return s1;
}

Classification classify(const Graph& g, PatternKind kind, B3Variant variant) {
  Classification c;
  c.kind = kind;
  switch (kind) {
    case PatternKind::BookB3: c.t1 = classify_book_b3(g, variant); break;
    case PatternKind::K23: c.t1 = classify_k23(g); break;
    case PatternKind::CyclePairS1:
      throw Error(Errc::UnsupportedKind, "S1 has its own h rule and is not a T0/T1 classification");
  }
  c.h = HVector::from_set(c.t1);
  return c;
}

bool contains_pattern_at(const Graph& g, PatternKind kind, Vertex u, B3Variant variant) {
  if (u >= g.order()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u) + " outside graph of order " +
                                            std::to_string(g.order()));
  }
  switch (kind) {
    case PatternKind::BookB3:
      if (embeds_covering(g, book_edges(), u)) return true;
      return variant == B3Variant::Loose &&
             (embeds_covering(g, wing_attached_edges(), u) || embeds_covering(g, mixed_attached_edges(), u));
    case PatternKind::K23: return embeds_covering(g, k23_edges(), u);
    case PatternKind::CyclePairS1: break;
  }
  throw Error(Errc::UnsupportedKind, "no 5-vertex pattern for S1");
}

HypothesisReport hypothesis_report(const Graph& g, const DemandPair& d, B3Variant variant) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(Errc::EmptyGraph, "hypothesis report needs at least one vertex");
  d.validate(n);

  HypothesisReport r;
  r.n_at_least_5 = n >= 5;
  r.book = classify(g, PatternKind::BookB3, variant);
  r.k23 = classify(g, PatternKind::K23);
  r.s1 = s1_vertices(g);

  auto deg = [&](Vertex u) { return static_cast<std::int64_t>(g.degree(u)); };
  auto min_ab = [&](Vertex u) { return std::min(d.a[u], d.b[u]); };

  // Collects the vertices violating `pred` and a reason line when any do.
  auto per_vertex = [&](VertexSet& failing, std::vector<std::string>& reasons, const char* condition,
                        auto&& pred) {
    std::size_t bad = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!pred(u)) {
        failing.insert(u);
        ++bad;
      }
    }
    if (bad != 0) reasons.push_back(count_phrase(bad, condition));
  };

  {
    VertexSet failing(n);
    std::vector<std::string> reasons;
    per_vertex(failing, reasons, "d >= a+b+1", [&](Vertex u) { return deg(u) >= d.a[u] + d.b[u] + 1; });
    r.thm_a = finish(std::move(failing), std::move(reasons));
  }
  {
    VertexSet failing(n);
    std::vector<std::string> reasons;
    if (!r.k23.t1.empty()) {
      failing |= r.k23.t1;
      reasons.push_back("graph contains K23 (" + std::to_string(r.k23.t1.size()) + " vertices in copies)");
    }
    per_vertex(failing, reasons, "a,b >= 1", [&](Vertex u) { return min_ab(u) >= 1; });
    per_vertex(failing, reasons, "d >= a+b", [&](Vertex u) { return deg(u) >= d.a[u] + d.b[u]; });
    r.thm_b = finish(std::move(failing), std::move(reasons));
  }
  {
    VertexSet failing(n);
    std::vector<std::string> reasons;
    if (!r.n_at_least_5) reasons.push_back("n < 5");
    if (!r.book.t1.empty()) {
      failing |= r.book.t1;
      reasons.push_back("graph contains B3 (" + std::to_string(r.book.t1.size()) + " vertices in copies)");
    }
    per_vertex(failing, reasons, "d >= a+b", [&](Vertex u) { return deg(u) >= d.a[u] + d.b[u]; });
    r.thm_c = finish(std::move(failing), std::move(reasons));
  }
  {
    VertexSet failing(n);
    std::vector<std::string> reasons;
    const HVector h = HVector::from_set(r.s1);
    per_vertex(failing, reasons, "d >= a+b-1+2h (S1)",
               [&](Vertex u) { return deg(u) >= d.a[u] + d.b[u] - 1 + 2 * h[u]; });
    per_vertex(failing, reasons, "min(a,b) >= 2(1-h) (S1)", [&](Vertex u) { return min_ab(u) >= 2 * (1 - h[u]); });
    r.thm_d = finish(std::move(failing), std::move(reasons));
  }
  auto main_check = [&](const Classification& c, std::int64_t floor_base, const char* floor_text) {
    VertexSet failing(n);
    std::vector<std::string> reasons;
    if (!r.n_at_least_5) reasons.push_back("n < 5");
    per_vertex(failing, reasons, "d >= a+b+h", [&](Vertex u) { return deg(u) >= d.a[u] + d.b[u] + c.h[u]; });
    per_vertex(failing, reasons, floor_text, [&](Vertex u) { return min_ab(u) >= floor_base - c.h[u]; });
    return finish(std::move(failing), std::move(reasons));
  };
  r.main_i = main_check(r.book, 1, "min(a,b) >= 1-h");
  r.main_ii = main_check(r.k23, 2, "min(a,b) >= 2-h");
  return r;
}

}  // namespace degpart
