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

#include "degpart/generate.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "degpart/error.hpp"

namespace degpart {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidArgument, "uniform_below needs a positive bound");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph generate_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

std::string_view plant_variant_name(PlantVariant v) noexcept {
  switch (v) {
    case PlantVariant::MainI: return "main_i";
    case PlantVariant::MainII: return "main_ii";
    case PlantVariant::ThmA: return "thmA";
  }
  return "?";
}

std::string_view plant_mode_name(PlantMode m) noexcept { return m == PlantMode::Tight ? "tight" : "slack"; }

std::string_view weaken_name(Weaken w) noexcept {
  switch (w) {
    case Weaken::None: return "none";
    case Weaken::DropH: return "drop_h";
    case Weaken::RelaxMin: return "relax_min";
  }
  return "?";
}

PatternKind plant_pattern(PlantVariant v) noexcept {
  return v == PlantVariant::MainII ? PatternKind::K23 : PatternKind::BookB3;
}

bool target_holds(const HypothesisReport& report, PlantVariant variant) noexcept {
  switch (variant) {
    case PlantVariant::MainI: return report.main_i.holds;
    case PlantVariant::MainII: return report.main_ii.holds;
    case PlantVariant::ThmA: return report.thm_a.holds;
  }
  return false;
}

DemandPair plant_demands(const Graph& g, PlantVariant variant, PlantMode mode, std::uint64_t seed, Weaken weaken,
                         B3Variant b3_variant) {
  const std::size_t n = g.order();
  if (variant != PlantVariant::ThmA && n < 5) {
    throw Error(Errc::Unplantable, "the " + std::string(plant_variant_name(variant)) + " target needs n >= 5");
  }

  HVector h = HVector::zeros(n);
  if (variant == PlantVariant::MainI) h = HVector::from_set(classify_book_b3(g, b3_variant));
  if (variant == PlantVariant::MainII) h = HVector::from_set(classify_k23(g));

  Rng rng(seed);
  DemandPair d = DemandPair::uniform(n, 0, 0);
  for (Vertex u = 0; u < n; ++u) {
    const auto deg = static_cast<std::int64_t>(g.degree(u));
    std::int64_t allowance = 0;
    std::int64_t floor = 0;
    switch (variant) {
      case PlantVariant::MainI:
        allowance = deg - h[u];
        floor = 1 - h[u];
        break;
      case PlantVariant::MainII:
        allowance = deg - h[u];
        floor = 2 - h[u];
        break;
      case PlantVariant::ThmA:
        allowance = deg - 1;
        floor = 0;
        break;
    }
    if (weaken == Weaken::DropH) allowance = deg;
    if (weaken == Weaken::RelaxMin) floor = std::max<std::int64_t>(0, floor - 1);

    if (allowance < 2 * floor) {
      throw Error(Errc::Unplantable, "vertex " + std::to_string(u) + " has degree " + std::to_string(deg) +
                                         ", too small for floors " + std::to_string(floor));
    }
    std::int64_t sum = allowance;
    if (mode == PlantMode::Slack) {
      // Sums s in [2f, S] carry s - 2f + 1 splits each; pick a split uniformly.
      const auto span = static_cast<std::uint64_t>(allowance - 2 * floor + 1);
      std::uint64_t k = uniform_below(rng, span * (span + 1) / 2);
      sum = 2 * floor;
      while (k >= static_cast<std::uint64_t>(sum - 2 * floor + 1)) {
        k -= static_cast<std::uint64_t>(sum - 2 * floor + 1);
        ++sum;
      }
      d.a[u] = floor + static_cast<std::int64_t>(k);
    } else {
      d.a[u] = floor + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(sum - 2 * floor + 1)));
    }
    d.b[u] = sum - d.a[u];
  }

  if (weaken == Weaken::None && !target_holds(hypothesis_report(g, d, b3_variant), variant)) {
    throw Error(Errc::InternalInvariant, "planted demands do not satisfy their target hypothesis");
  }
  return d;
}

}  // namespace degpart
