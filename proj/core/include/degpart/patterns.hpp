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

#include <string>
#include <string_view>

#include "degpart/feasibility.hpp"
#include "degpart/graph.hpp"

namespace degpart {

/// Prescribed subgraphs that determine T1.
///
/// BookB3 is three triangles on a common spine edge (K4-e plus a vertex joined
/// to both of its degree-3 vertices). K23 is the complete bipartite K_{2,3}.
/// CyclePairS1 names the short-cycle-pair rule and has its own h semantics.
enum class PatternKind { BookB3, K23, CyclePairS1 };

/// Which graphs count as "a vertex joined to two vertices of K4-e".
///
/// Loose (the default) takes all three attachments: to both spine vertices
/// (the book), to both wings, or to one spine vertex and one wing. Strict
/// takes the book only. Under Strict the degree theorem fails already on
/// five vertices (tests/data/strict_b3_counterexample.inst), and the
/// mixed attachment is exactly the configuration the exchange argument rules
/// out, so Strict is kept for experiments only.
enum class B3Variant { Strict, Loose };

std::string_view pattern_name(PatternKind kind) noexcept;
std::string_view b3_variant_name(B3Variant variant) noexcept;

struct Classification {
  PatternKind kind = PatternKind::BookB3;
  VertexSet t1;
  HVector h;
};

/// Vertices lying in some (not necessarily induced) copy of the pattern.
/// Book copies are the endpoints and common neighbours of every edge with
/// >= 3 common neighbours; Loose additionally enumerates every K4-e and the
/// vertices that attach to a wing.
VertexSet classify_book_b3(const Graph& g, B3Variant variant = B3Variant::Loose);

/// Vertices lying in some copy of K_{2,3}: every pair (adjacent or not) with
/// >= 3 common neighbours contributes itself and those neighbours.
VertexSet classify_k23(const Graph& g);

/// Endpoints of edges lying on two 3- or 4-cycles with different vertex sets.
VertexSet s1_vertices(const Graph& g);

/// Throws UnsupportedKind for CyclePairS1.
Classification classify(const Graph& g, PatternKind kind, B3Variant variant = B3Variant::Loose);

/// Reference check by enumerating every injective placement of the 5-vertex
/// pattern. Exponential; intended for n <= 10.
bool contains_pattern_at(const Graph& g, PatternKind kind, Vertex u,
                         B3Variant variant = B3Variant::Loose);

struct TheoremCheck {
  bool holds = false;
  VertexSet failing;
  std::string reason;
};

/// Per-theorem evaluation of every degree/structure hypothesis for (G, a, b).
struct HypothesisReport {
  bool n_at_least_5 = false;
  TheoremCheck thm_a;    // d >= a+b+1
  TheoremCheck thm_b;    // K23-free, a,b >= 1, d >= a+b
  TheoremCheck thm_c;    // n >= 5, book-free, d >= a+b
  TheoremCheck thm_d;    // S0/S1 rule
  TheoremCheck main_i;   // book T1, d >= a+b+h, min(a,b) >= 1-h
  TheoremCheck main_ii;  // K23 T1, d >= a+b+h, min(a,b) >= 2-h
  Classification book;
  Classification k23;
  VertexSet s1;
};

HypothesisReport hypothesis_report(const Graph& g, const DemandPair& d,
                                   B3Variant variant = B3Variant::Loose);

}  // namespace degpart
