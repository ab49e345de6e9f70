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
#include <span>
#include <vector>

#include "degpart/vertex_set.hpp"

namespace degpart {

/// Ordered pair of disjoint vertex sets covering V. Either side may be empty
/// while a search is running; solver results never are.
struct Partition {
  VertexSet x1;
  VertexSet x2;

  /// side[u] == 1 puts u in x1, anything else in x2.
  static Partition from_sides(std::span<const std::uint8_t> side);
  static Partition from_first(const VertexSet& x1);

  std::size_t universe() const noexcept { return x1.universe(); }
  bool is_partition_of(std::size_t n) const;

  /// Throws NotAPartition unless the two sides are disjoint and cover 0..n-1.
  void validate(std::size_t n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// A pair of disjoint (not necessarily covering) vertex sets.
struct VertexPair {
  VertexSet first;
  VertexSet second;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

}  // namespace degpart
