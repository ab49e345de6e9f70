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

#include "degpart/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "degpart/error.hpp"
#include "degpart/generate.hpp"

namespace degpart {

namespace {

std::int64_t deg_in(const Graph& g, Vertex u, const VertexSet& x) { return static_cast<std::int64_t>(g.degree_in(u, x)); }

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x) return std::numeric_limits<std::uint64_t>::max();
  return x * y;
}

void check_h(const HVector& h, std::size_t n) {
  if (h.size() != n) {
    throw Error(Errc::InvalidArgument, "h vector has length " + std::to_string(h.size()) + ", expected " +
                                           std::to_string(n));
  }
}

}  // namespace

std::string_view status_name(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Found: return "found";
    case SolveStatus::NoneExists: return "none";
    case SolveStatus::Unknown: return "unknown";
  }
  return "?";
}

std::int64_t weight(const Graph& g, const DemandPair& d, const Partition& p) {
  p.validate(g.order());
  d.validate(g.order());
  std::int64_t w = static_cast<std::int64_t>(g.edges_within(p.x1) + g.edges_within(p.x2));
  p.x1.for_each([&](Vertex u) { w += d.b[u]; });
  p.x2.for_each([&](Vertex v) { w += d.a[v]; });
  return w;
}

std::int64_t delta_move(const Graph& g, const DemandPair& d, const Partition& p, Vertex u, Side to) {
  const VertexSet& source = to == Side::Second ? p.x1 : p.x2;
  if (!source.contains(u)) {
    throw Error(Errc::WrongSide, "vertex " + std::to_string(u) + " is not on side " +
                                     std::to_string(static_cast<int>(other(to))));
  }
  const std::int64_t in1 = deg_in(g, u, p.x1);
  const std::int64_t in2 = deg_in(g, u, p.x2);
  return to == Side::Second ? in2 - in1 + d.a[u] - d.b[u] : in1 - in2 + d.b[u] - d.a[u];
}

std::int64_t delta_swap(const Graph& g, const DemandPair& d, const Partition& p, Vertex u, Vertex v) {
  if (!p.x1.contains(u)) throw Error(Errc::WrongSide, "swap needs u on side 1, got " + std::to_string(u));
  if (!p.x2.contains(v)) throw Error(Errc::WrongSide, "swap needs v on side 2, got " + std::to_string(v));
  return delta_move(g, d, p, u, Side::Second) + delta_move(g, d, p, v, Side::First) - 2 * g.edge_indicator(u, v);
}

std::optional<VertexPair> extract_feasible_pair(const Graph& g, const DemandPair& d, const HVector& h,
                                                const Partition& p) {
  const std::size_t n = g.order();
  check_h(h, n);
  const Threshold fa = Threshold::first_side(d);
  const Threshold fb = Threshold::second_side(d);
  const VertexSet everything = VertexSet::full(n);

  auto around_b = [&](const VertexSet& b_core) -> std::optional<VertexPair> {
    if (b_core.empty()) return std::nullopt;
    VertexSet a_core = f_core(g, everything - b_core, fa);
    if (a_core.empty()) return std::nullopt;
    return VertexPair{std::move(a_core), b_core};
  };
  auto around_a = [&](const VertexSet& a_core) -> std::optional<VertexPair> {
    if (a_core.empty()) return std::nullopt;
    VertexSet b_core = f_core(g, everything - a_core, fb);
    if (b_core.empty()) return std::nullopt;
    return VertexPair{a_core, std::move(b_core)};
  };

  std::optional<VertexPair> found = around_b(f_core(g, p.x2, fb));
  if (!found) found = around_a(f_core(g, p.x1, fa));
  if (!found) {
    for (const Vertex u : bad_vertices(g, p.x1, Side::First, d, h).to_vector()) {
      VertexSet widened = p.x2;
      widened.insert(u);
      if ((found = around_b(f_core(g, widened, fb)))) break;
    }
  }
  if (!found) {
    for (const Vertex v : bad_vertices(g, p.x2, Side::Second, d, h).to_vector()) {
      VertexSet widened = p.x1;
      widened.insert(v);
      if ((found = around_a(f_core(g, widened, fa)))) break;
    }
  }
  if (found && !is_feasible_pair(g, found->first, found->second, d)) {
    throw Error(Errc::InternalInvariant, "extracted pair failed the feasibility check");
  }
  return found;
}

Partition degenerate_init(const Graph& g, const DemandPair& d, const HVector& h, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (n < 2) throw Error(Errc::TooSmall, "degenerate_init needs at least two vertices");
  d.validate(n);
  check_h(h, n);

  Vertex hub = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (g.degree(u) > g.degree(hub)) hub = u;
  }
  const Threshold second = good_threshold(Side::Second, d, h);
  VertexSet rest = VertexSet::full(n);
  rest.erase(hub);
  VertexSet x2 = f_core(g, rest, second);

  if (x2.empty()) {
    Rng rng(seed);
    std::vector<Vertex> order(n);
    for (Vertex u = 0; u < n; ++u) order[u] = u;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, i + 1)]);
    VertexSet x1(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) x1.insert(order[i]);
    return Partition::from_first(x1);
  }

  // One ascending pass suffices: once removing v empties the core, it also
  // does for every later (smaller) x2.
  for (Vertex v = 0; v < n; ++v) {
    if (!x2.contains(v)) continue;
    VertexSet without = x2;
    without.erase(v);
    VertexSet core = f_core(g, without, second);
    if (!core.empty()) x2 = std::move(core);
  }
  return Partition{x2.complement(), x2};
}

std::uint64_t potential_bound(const Graph& g, const DemandPair& d) {
  std::uint64_t total = g.edge_count();
  for (std::size_t u = 0; u < d.size(); ++u) total += static_cast<std::uint64_t>(d.a[u] + d.b[u]);
  return saturating_mul(total + 1, g.order() + 1);
}

SearchState local_search(const Graph& g, const DemandPair& d, const HVector& h, Partition init,
                         const LocalSearchOptions& options) {
  const std::size_t n = g.order();
  d.validate(n);
  check_h(h, n);
  init.validate(n);

  const std::uint64_t budget = options.budget != 0 ? options.budget : saturating_mul(10, potential_bound(g, d));

  SearchState state;
  state.omega = weight(g, d, init);
  state.partition = std::move(init);

  std::vector<std::uint8_t> side(n);
  std::vector<std::int64_t> in1(n), in2(n);
  for (Vertex u = 0; u < n; ++u) {
    side[u] = state.partition.x1.contains(u) ? 1 : 2;
    in1[u] = deg_in(g, u, state.partition.x1);
    in2[u] = deg_in(g, u, state.partition.x2);
  }
  auto bad1 = [&](Vertex u) { return side[u] == 1 && in1[u] <= d.a[u]; };
  auto bad2 = [&](Vertex v) { return side[v] == 2 && in2[v] <= d.b[v] + h[v] - 1; };
  auto gain_to2 = [&](Vertex u) { return in2[u] - in1[u] + d.a[u] - d.b[u]; };
  auto gain_to1 = [&](Vertex v) { return in1[v] - in2[v] + d.b[v] - d.a[v]; };

  auto cross = [&](Vertex w) {
    const bool from1 = side[w] == 1;
    for (const Vertex x : g.neighbor_list(w)) {
      if (from1) {
        --in1[x];
        ++in2[x];
      } else {
        --in2[x];
        ++in1[x];
      }
    }
    if (from1) {
      state.partition.x1.erase(w);
      state.partition.x2.insert(w);
      side[w] = 2;
    } else {
      state.partition.x2.erase(w);
      state.partition.x1.insert(w);
      side[w] = 1;
    }
  };
  auto try_extract = [&] {
    state.pair = extract_feasible_pair(g, d, h, state.partition);
    return state.pair.has_value();
  };

  if (try_extract()) return state;

  while (true) {
    if (state.trace.size() >= budget) {
      state.budget_exhausted = true;
      break;
    }
    std::optional<Move> chosen;
    const bool x1_movable = state.partition.x1.size() > 1;
    const bool x2_movable = state.partition.x2.size() > 1;
    for (Vertex u = 0; u < n && !chosen && x1_movable; ++u) {
      // Leaving X1 also lowers |X1|, so an ω-neutral move still improves.
      if (bad1(u) && gain_to2(u) >= 0) chosen = Move{Move::Kind::ToSecond, u, u, gain_to2(u)};
    }
    for (Vertex v = 0; v < n && !chosen && x2_movable; ++v) {
      if (bad2(v) && gain_to1(v) > 0) chosen = Move{Move::Kind::ToFirst, v, v, gain_to1(v)};
    }
    std::optional<Move> neutral;
    for (Vertex u = 0; u < n && !chosen; ++u) {
      if (!bad1(u)) continue;
      for (Vertex v = 0; v < n && !chosen; ++v) {
        if (!bad2(v)) continue;
        const std::int64_t gain = gain_to2(u) + gain_to1(v) - 2 * (g.adjacent(u, v) ? 1 : 0);
        if (gain > 0) {
          chosen = Move{Move::Kind::Swap, u, v, gain};
        } else if (gain == 0 && !neutral) {
          neutral = Move{Move::Kind::Swap, u, v, 0};
        }
      }
    }
    if (!chosen && neutral && state.neutral_swaps < options.allow_neutral_swaps) {
      chosen = neutral;
      ++state.neutral_swaps;
    }
    if (!chosen) break;

    cross(chosen->u);
    if (chosen->kind == Move::Kind::Swap) cross(chosen->v);
    state.omega += chosen->delta;
    state.trace.push_back(*chosen);
#ifndef NDEBUG
    if (state.omega != weight(g, d, state.partition)) {
      throw Error(Errc::InternalInvariant, "incremental weight drifted from recomputation");
    }
#endif
    if (try_extract()) return state;
  }
  return state;
}

OracleResult exhaustive_oracle(const Graph& g, const DemandPair& d, std::size_t limit) {
  const std::size_t n = g.order();
  const std::size_t cap = std::min<std::size_t>(limit, 62);
  if (n > cap) {
    throw Error(Errc::TooLarge,
                "exhaustive oracle limited to " + std::to_string(cap) + " vertices, got " + std::to_string(n));
  }
  d.validate(n);
  OracleResult result;
  if (n < 2) return result;

  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  const bool symmetric = d.a == d.b;
  const std::uint64_t step = symmetric ? 2 : 1;

  for (std::uint64_t mask = 1; mask < all; mask += step) {
    ++result.assignments_checked;
    const std::uint64_t rest = all & ~mask;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if ((mask >> u) & 1U) {
        ok = std::popcount(adj[u] & mask) >= d.a[u];
      } else {
        ok = std::popcount(adj[u] & rest) >= d.b[u];
      }
    }
    if (ok) {
      VertexSet x1(n);
      for (std::size_t u = 0; u < n; ++u) {
        if ((mask >> u) & 1U) x1.insert(static_cast<Vertex>(u));
      }
      Partition p = Partition::from_first(x1);
      if (!is_feasible_partition(g, p, d)) {
        throw Error(Errc::InternalInvariant, "oracle assignment failed the feasibility check");
      }
      result.partition = std::move(p);
      return result;
    }
  }
  return result;
}

SolveOutcome solve(const Graph& g, const DemandPair& d, const SolveConfig& config) {
  const std::size_t n = g.order();
  if (n < 2) throw Error(Errc::TooSmall, "solve needs at least two vertices");
  d.validate(n);
  if (config.pattern == PatternKind::CyclePairS1) {
    throw Error(Errc::UnsupportedKind, "the solver classifies with b3 or k23 only");
  }

  SolveOutcome out;
  out.hypothesis = hypothesis_report(g, d, config.b3_variant);
  const HVector& h = config.pattern == PatternKind::BookB3 ? out.hypothesis.book.h : out.hypothesis.k23.h;

  auto accept = [&](Partition p, bool by_search) {
    if (!is_feasible_partition(g, p, d)) {
      throw Error(Errc::InternalInvariant, "solver produced an infeasible partition");
    }
    out.status = SolveStatus::Found;
    out.omega = weight(g, d, p);
    out.partition = std::move(p);
    out.stats.found_by_local_search = by_search;
  };

  // Lemma-style extension needs d >= a+b; without it fall back to the two
  // direct completions of the pair.
  auto complete = [&](const VertexPair& pair, const Partition& current) -> std::optional<Partition> {
    if (is_feasible_partition(g, current, d)) return current;
    try {
      return extend_pair_to_partition(g, d, pair.first, pair.second);
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionViolated) throw;
    }
    for (Partition candidate : {Partition::from_first(pair.first), Partition{pair.second.complement(), pair.second}}) {
      if (is_feasible_partition(g, candidate, d)) return candidate;
    }
    return std::nullopt;
  };

  Rng rng(config.seed);
  const LocalSearchOptions options{config.budget, config.allow_neutral_swaps};
  for (std::size_t attempt = 0; attempt <= config.restarts; ++attempt) {
    Partition init;
    if (attempt == 0) {
      init = degenerate_init(g, d, h, config.seed);
    } else {
      VertexSet x1(n);
      for (Vertex u = 0; u < n; ++u) {
        if ((rng() >> 63) != 0) x1.insert(u);
      }
      init = Partition::from_first(x1);
      out.stats.restarts = attempt;
    }
    const SearchState state = local_search(g, d, h, std::move(init), options);
    out.stats.moves += state.trace.size();
    if (state.pair) {
      if (auto p = complete(*state.pair, state.partition)) {
        accept(std::move(*p), true);
        return out;
      }
    }
  }

  if (config.use_oracle && n <= std::min<std::size_t>(config.oracle_limit, 62)) {
    out.stats.oracle_used = true;
    OracleResult oracle = exhaustive_oracle(g, d, config.oracle_limit);
    if (oracle.partition) {
      accept(std::move(*oracle.partition), false);
    } else {
      out.status = SolveStatus::NoneExists;
      out.theorem_violation = out.hypothesis.main_i.holds || out.hypothesis.main_ii.holds;
    }
    return out;
  }
  out.status = SolveStatus::Unknown;
  return out;
}

}  // namespace degpart
