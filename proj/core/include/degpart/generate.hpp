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

#include <cstdint>
#include <random>
#include <string_view>

#include "degpart/feasibility.hpp"
#include "degpart/graph.hpp"
#include "degpart/patterns.hpp"

namespace degpart {

/// All library randomness goes through mt19937_64, whose output sequence is
/// fixed by the standard; the helpers below avoid the implementation-defined
/// distributions so that seeds reproduce across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) built from the top 53 bits.
double uniform_unit(Rng& rng);

/// splitmix64 finaliser; derives independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// G(n, p): every pair i < j independently with probability p, deterministic
/// per seed. Throws InvalidArgument unless 0 <= p <= 1.
Graph generate_graph(std::size_t n, double p, std::uint64_t seed);

/// Which hypothesis the planted demands target.
enum class PlantVariant { MainI, MainII, ThmA };

/// Tight: a + b equals the degree allowance exactly. Slack: a + b at most it.
enum class PlantMode { Tight, Slack };

/// Deliberate relaxations used to search for tightness witnesses.
enum class Weaken { None, DropH, RelaxMin };

std::string_view plant_variant_name(PlantVariant v) noexcept;
std::string_view plant_mode_name(PlantMode m) noexcept;
std::string_view weaken_name(Weaken w) noexcept;

/// Pattern whose classification supplies h for a variant.
PatternKind plant_pattern(PlantVariant v) noexcept;

/// Samples a(u), b(u) >= floor(u) with a(u) + b(u) = allowance(u) (tight) or
/// <= allowance(u) (slack), uniformly over the admissible pairs.
///
///     MainI:  allowance d - h, floor 1 - h (book classification)
///     MainII: allowance d - h, floor 2 - h (K23 classification)
///     ThmA:   allowance d - 1, floor 0
///
/// DropH uses allowance d; RelaxMin lowers every floor by one. Throws
/// Unplantable when a vertex has no admissible pair, or when a Main target is
/// requested on fewer than five vertices. Unweakened output is re-checked
/// with hypothesis_report.
DemandPair plant_demands(const Graph& g, PlantVariant variant, PlantMode mode, std::uint64_t seed,
                         Weaken weaken = Weaken::None, B3Variant b3_variant = B3Variant::Loose);

/// Whether the report marks the variant's target theorem as holding.
bool target_holds(const HypothesisReport& report, PlantVariant variant) noexcept;

}  // namespace degpart
