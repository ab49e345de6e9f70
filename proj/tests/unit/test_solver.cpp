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


#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "degpart/error.hpp"
#include "degpart/generate.hpp"
#include "degpart/patterns.hpp"
#include "degpart/solver.hpp"

using namespace degpart;
using degpart::testing::complete_graph;
using degpart::testing::cycle_graph;
using degpart::testing::path_graph;

namespace {

DemandPair ab(std::size_t n, std::int64_t a, std::int64_t b) { return DemandPair::uniform(n, a, b); }

Partition split(std::size_t n, std::initializer_list<Vertex> first) {
  return Partition::from_first(VertexSet::of(n, first));
}

// ω recomputed from per-vertex sides only.
std::int64_t omega_by_sides(const Graph& g, const DemandPair& d, const std::vector<char>& first) {
  std::int64_t w = 0;
  for (const auto& [u, v] : g.edges()) {
    if (first[u] == first[v]) ++w;
  }
  for (Vertex u = 0; u < g.order(); ++u) w += first[u] ? d.b[u] : d.a[u];
  return w;
}

std::vector<char> sides_of(const Partition& p) {
  std::vector<char> first(p.universe());
  p.x1.for_each([&](Vertex u) { first[u] = 1; });
  return first;
}

Partition random_partition(std::size_t n, Rng& rng) {
  while (true) {
    const auto x1 = testing::random_subset(n, rng);
    if (!x1.empty() && x1.size() < n) return Partition::from_first(x1);
  }
}

Graph strict_counterexample_graph() { return build_graph(5, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}); }

DemandPair strict_counterexample_demands() {
  DemandPair d = ab(5, 1, 1);
  d.a = {1, 3, 1, 2, 2};
  return d;
}

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InternalInvariant;
}

}  // namespace

TEST_CASE("weight examples") {
  CHECK(weight(path_graph(3), ab(3, 1, 1), split(3, {0, 1})) == 4);
  CHECK(weight(complete_graph(3), ab(3, 1, 1), split(3, {0})) == 4);
  DemandPair d = ab(4, 0, 0);
  d.a = {1, 2, 3, 4};
  d.b = {10, 20, 30, 40};
  CHECK(weight(build_graph(4, {}), d, split(4, {0, 2})) == 10 + 30 + 2 + 4);
}

TEST_CASE("delta_move examples") {
  const auto p3 = path_graph(3);
  const auto p = split(3, {0, 1});
  CHECK(delta_move(p3, ab(3, 1, 1), p, 1, Side::Second) == 0);
  CHECK(weight(p3, ab(3, 1, 1), split(3, {0})) == 4);

  const auto isolated = build_graph(4, {{0, 1}, {1, 2}});
  DemandPair d = ab(4, 1, 2);
  d.a[3] = d.b[3] = 5;
  CHECK(delta_move(isolated, d, split(4, {0, 3}), 3, Side::Second) == 0);
  CHECK(delta_move(isolated, d, split(4, {0, 1}), 3, Side::First) == 0);

  const auto k3 = complete_graph(3);
  CHECK(delta_move(k3, ab(3, 1, 1), split(3, {0}), 0, Side::Second) == 2);
  CHECK(code_of([&] { (void)delta_move(k3, ab(3, 1, 1), split(3, {0}), 1, Side::Second); }) == Errc::WrongSide);
}

TEST_CASE("delta_swap examples") {
  const auto edgeless = build_graph(4, {});
  CHECK(delta_swap(edgeless, ab(4, 2, 2), split(4, {0, 1}), 0, 3) == 0);

  const auto c4 = cycle_graph(4);
  const auto p = split(4, {0, 1});
  CHECK(delta_swap(c4, ab(4, 1, 1), p, 1, 2) == -2);
  CHECK(weight(c4, ab(4, 1, 1), split(4, {0, 2})) - weight(c4, ab(4, 1, 1), p) == -2);

  CHECK(delta_swap(path_graph(3), ab(3, 1, 1), split(3, {0, 1}), 0, 2) == 0);
  CHECK(code_of([&] { (void)delta_swap(c4, ab(4, 1, 1), p, 2, 1); }) == Errc::WrongSide);
}

TEST_CASE("deltas equal the recomputed weight difference") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 10);
    const auto g = generate_graph(n, uniform_unit(rng), rng());
    const auto d = testing::random_demands(n, 4, rng);
    const auto p = random_partition(n, rng);
    auto first = sides_of(p);
    const std::int64_t before = omega_by_sides(g, d, first);
    CHECK(weight(g, d, p) == before);

    const Vertex u = static_cast<Vertex>(uniform_below(rng, n));
    auto moved = first;
    moved[u] = static_cast<char>(!moved[u]);
    const Side to = first[u] ? Side::Second : Side::First;
    CHECK(delta_move(g, d, p, u, to) == omega_by_sides(g, d, moved) - before);

    const auto x1 = p.x1.to_vector();
    const auto x2 = p.x2.to_vector();
    const Vertex su = x1[uniform_below(rng, x1.size())];
    const Vertex sv = x2[uniform_below(rng, x2.size())];
    auto swapped = first;
    swapped[su] = 0;
    swapped[sv] = 1;
    CHECK(delta_swap(g, d, p, su, sv) == omega_by_sides(g, d, swapped) - before);
  }
}

TEST_CASE("extract_feasible_pair examples") {
  const auto c5 = cycle_graph(5);
  const auto pair = extract_feasible_pair(c5, ab(5, 1, 1), HVector::zeros(5), split(5, {0, 1}));
  REQUIRE(pair);
  CHECK(pair->first == VertexSet::of(5, {0, 1}));
  CHECK(pair->second == VertexSet::of(5, {2, 3, 4}));

  CHECK_FALSE(extract_feasible_pair(complete_graph(3), ab(3, 1, 1), HVector::zeros(3), split(3, {0})));

  const auto edgeless = build_graph(4, {});
  const auto p = split(4, {1, 2});
  const auto trivial = extract_feasible_pair(edgeless, ab(4, 0, 0), HVector::zeros(4), p);
  REQUIRE(trivial);
  CHECK(trivial->first == p.x1);
  CHECK(trivial->second == p.x2);
}

TEST_CASE("degenerate_init examples") {
  CHECK(degenerate_init(cycle_graph(5), ab(5, 1, 1), HVector::zeros(5)) == split(5, {0, 1, 2}));

  const auto edgeless = degenerate_init(build_graph(5, {}), ab(5, 1, 0), HVector::zeros(5));
  CHECK(edgeless.x2.size() == 1);
  CHECK(edgeless.x1.size() == 4);

  const auto k2 = degenerate_init(build_graph(2, {{0, 1}}), ab(2, 0, 0), HVector::zeros(2));
  CHECK(k2.is_partition_of(2));
  CHECK(k2.x1.size() == 1);

  CHECK(code_of([] { (void)degenerate_init(build_graph(1, {}), ab(1, 0, 0), HVector::zeros(1)); }) ==
        Errc::TooSmall);
}

TEST_CASE("degenerate_init is seed-deterministic and always a partition") {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 12);
    const auto g = generate_graph(n, uniform_unit(rng), rng());
    const auto d = testing::random_demands(n, 3, rng);
    const auto h = HVector::from_set(testing::random_subset(n, rng));
    const std::uint64_t seed = rng();
    const auto p = degenerate_init(g, d, h, seed);
    CHECK(p.is_partition_of(n));
    CHECK(degenerate_init(g, d, h, seed) == p);
  }
}

TEST_CASE("local_search examples") {
  const auto c5 = cycle_graph(5);
  const auto done = local_search(c5, ab(5, 1, 1), HVector::zeros(5), split(5, {0, 1}));
  CHECK(done.trace.empty());
  CHECK(done.pair.has_value());

  const auto k3 = local_search(complete_graph(3), ab(3, 1, 1), HVector::zeros(3), split(3, {0}));
  CHECK_FALSE(k3.pair.has_value());
  CHECK_FALSE(k3.budget_exhausted);

  const auto from_init = local_search(c5, ab(5, 1, 1), HVector::zeros(5), split(5, {0, 1, 2}));
  REQUIRE(from_init.pair.has_value());
  CHECK(from_init.pair->second == VertexSet::of(5, {3, 4}));
  CHECK(is_feasible_pair(c5, from_init.pair->first, from_init.pair->second, ab(5, 1, 1)));
}

TEST_CASE("local_search traces replay, improve the potential and respect the bound") {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 12);
    const auto g = generate_graph(n, uniform_unit(rng), rng());
    const auto d = testing::random_demands(n, 3, rng);
    const auto h = HVector::from_set(testing::random_subset(n, rng));
    const auto init = random_partition(n, rng);
    const auto state = local_search(g, d, h, init);

    CHECK(state.trace.size() <= potential_bound(g, d));
    CHECK(state.partition.is_partition_of(n));
    CHECK(state.omega == weight(g, d, state.partition));
    if (state.pair) CHECK(is_feasible_pair(g, state.pair->first, state.pair->second, d));

    auto first = sides_of(init);
    std::int64_t omega = omega_by_sides(g, d, first);
    std::size_t x1_size = init.x1.size();
    for (const auto& move : state.trace) {
      auto next = first;
      next[move.u] = static_cast<char>(!next[move.u]);
      if (move.kind == Move::Kind::Swap) next[move.v] = static_cast<char>(!next[move.v]);
      const std::int64_t next_omega = omega_by_sides(g, d, next);
      std::size_t next_size = 0;
      for (char c : next) next_size += c ? 1 : 0;
      CHECK(move.delta == next_omega - omega);
      const bool improves = next_omega > omega || (next_omega == omega && next_size < x1_size);
      CHECK(improves);
      first = next;
      omega = next_omega;
      x1_size = next_size;
    }
    CHECK(first == sides_of(state.partition));
  }
}

TEST_CASE("local_search budget and neutral swaps") {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + uniform_below(rng, 10);
    const auto g = generate_graph(n, uniform_unit(rng), rng());
    const auto d = testing::random_demands(n, 3, rng);
    const auto h = HVector::zeros(n);
    const auto init = random_partition(n, rng);
    const auto capped = local_search(g, d, h, init, LocalSearchOptions{1, 0});
    CHECK(capped.trace.size() <= 1);
    const auto neutral = local_search(g, d, h, init, LocalSearchOptions{0, 3});
    CHECK(neutral.neutral_swaps <= 3);
  }
}

TEST_CASE("conditional move bounds") {
  Rng rng(35);
  std::size_t checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 9);
    const auto g = generate_graph(n, 0.3 + 0.7 * uniform_unit(rng), rng());
    const auto h = HVector::from_set(testing::random_subset(n, rng));
    DemandPair d = ab(n, 0, 0);
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      const auto room = static_cast<std::int64_t>(g.degree(u)) - h[u];
      if (room < 0) {
        ok = false;
        break;
      }
      d.a[u] = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(room + 1)));
      d.b[u] = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(room - d.a[u] + 1)));
    }
    if (!ok) continue;
    const auto p = random_partition(n, rng);
    const auto b1 = bad_vertices(g, p.x1, Side::First, d, h);
    const auto b2 = bad_vertices(g, p.x2, Side::Second, d, h);
    b1.for_each([&](Vertex u) {
      CHECK(delta_move(g, d, p, u, Side::Second) >= h[u]);
      ++checked;
    });
    b2.for_each([&](Vertex v) {
      CHECK(delta_move(g, d, p, v, Side::First) >= 2 - h[v]);
      ++checked;
    });
    b1.for_each([&](Vertex u) {
      b2.for_each([&](Vertex v) {
        CHECK(delta_swap(g, d, p, u, v) >= 2 - h[v] + h[u] - 2 * g.edge_indicator(u, v));
      });
    });
  }
  CHECK(checked > 100);
}

TEST_CASE("exhaustive_oracle examples") {
  CHECK_FALSE(exhaustive_oracle(complete_graph(3), ab(3, 1, 1)).partition);

  const auto c5 = exhaustive_oracle(cycle_graph(5), ab(5, 1, 1));
  REQUIRE(c5.partition);
  CHECK(is_feasible_partition(cycle_graph(5), *c5.partition, ab(5, 1, 1)));

  const auto k2 = exhaustive_oracle(build_graph(2, {{0, 1}}), ab(2, 0, 0));
  REQUIRE(k2.partition);
  CHECK(*k2.partition == split(2, {0}));

  CHECK(code_of([] { (void)exhaustive_oracle(build_graph(25, {}), ab(25, 0, 0)); }) == Errc::TooLarge);
  CHECK_NOTHROW((void)exhaustive_oracle(build_graph(25, {}), ab(25, 0, 0), 25));
}

TEST_CASE("exhaustive_oracle agrees with plain enumeration") {
  Rng rng(36);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const auto g = generate_graph(n, uniform_unit(rng), rng());
    auto d = testing::random_demands(n, 3, rng);
    if (trial % 3 == 0) d.b = d.a;
    const auto result = exhaustive_oracle(g, d);
    CHECK(result.partition.has_value() == testing::feasible_partition_exists(g, d));
    if (result.partition) CHECK(is_feasible_partition(g, *result.partition, d));
  }
}

TEST_CASE("solve examples") {
  const auto c5 = solve(cycle_graph(5), ab(5, 1, 1));
  CHECK(c5.status == SolveStatus::Found);
  CHECK(c5.hypothesis.main_i.holds);
  REQUIRE(c5.partition);
  CHECK(is_feasible_partition(cycle_graph(5), *c5.partition, ab(5, 1, 1)));
  CHECK(c5.omega == weight(cycle_graph(5), ab(5, 1, 1), *c5.partition));

  const auto k3 = solve(complete_graph(3), ab(3, 1, 1));
  CHECK(k3.status == SolveStatus::NoneExists);
  CHECK_FALSE(k3.hypothesis.main_i.holds);
  CHECK_FALSE(k3.theorem_violation);

  const auto k5 = solve(complete_graph(5), ab(5, 2, 2));
  CHECK(k5.status == SolveStatus::NoneExists);
  CHECK_FALSE(k5.hypothesis.main_i.holds);
  CHECK_FALSE(k5.theorem_violation);

  SolveConfig no_oracle;
  no_oracle.use_oracle = false;
  CHECK(solve(complete_graph(3), ab(3, 1, 1), no_oracle).status == SolveStatus::Unknown);

  CHECK(code_of([] { (void)solve(build_graph(1, {}), ab(1, 0, 0)); }) == Errc::TooSmall);
  SolveConfig s1;
  s1.pattern = PatternKind::CyclePairS1;
  CHECK(code_of([&] { (void)solve(cycle_graph(5), ab(5, 1, 1), s1); }) == Errc::UnsupportedKind);
}

TEST_CASE("solve flags the strict-book counterexample") {
  const auto g = strict_counterexample_graph();
  const auto d = strict_counterexample_demands();
  CHECK_FALSE(testing::feasible_partition_exists(g, d));

  SolveConfig strict;
  strict.b3_variant = B3Variant::Strict;
  const auto flagged = solve(g, d, strict);
  CHECK(flagged.status == SolveStatus::NoneExists);
  CHECK(flagged.hypothesis.main_i.holds);
  CHECK(flagged.theorem_violation);

  const auto loose = solve(g, d);
  CHECK(loose.status == SolveStatus::NoneExists);
  CHECK_FALSE(loose.hypothesis.main_i.holds);
  CHECK_FALSE(loose.theorem_violation);
}

TEST_CASE("solve agrees with enumeration and is deterministic") {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const auto g = generate_graph(n, uniform_unit(rng), rng());
    const auto d = testing::random_demands(n, 2, rng);
    SolveConfig cfg;
    cfg.seed = rng();
    cfg.pattern = trial % 2 == 0 ? PatternKind::BookB3 : PatternKind::K23;
    const auto out = solve(g, d, cfg);
    CHECK(out.status != SolveStatus::Unknown);
    CHECK((out.status == SolveStatus::Found) == testing::feasible_partition_exists(g, d));
    if (out.partition) CHECK(is_feasible_partition(g, *out.partition, d));
    const auto again = solve(g, d, cfg);
    CHECK(again.status == out.status);
    CHECK(again.partition == out.partition);
    CHECK(again.stats.moves == out.stats.moves);
  }
}
