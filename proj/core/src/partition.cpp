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

#include "degpart/partition.hpp"

#include <string>

#include "degpart/error.hpp"

namespace degpart {

Partition Partition::from_sides(std::span<const std::uint8_t> side) {
  Partition p{VertexSet(side.size()), VertexSet(side.size())};
  for (std::size_t u = 0; u < side.size(); ++u) {
    (side[u] == 1 ? p.x1 : p.x2).insert(static_cast<Vertex>(u));
  }
  return p;
}

Partition Partition::from_first(const VertexSet& x1) { return Partition{x1, x1.complement()}; }

bool Partition::is_partition_of(std::size_t n) const {
  return x1.universe() == n && x2.universe() == n && !x1.intersects(x2) && x1.size() + x2.size() == n;
}

void Partition::validate(std::size_t n) const {
  if (x1.universe() != n || x2.universe() != n) {
    throw Error(Errc::NotAPartition, "partition sides are not over 0.." + std::to_string(n) + "-1");
  }
  if (x1.intersects(x2)) throw Error(Errc::NotAPartition, "partition sides overlap");
  if (x1.size() + x2.size() != n) throw Error(Errc::NotAPartition, "partition sides miss a vertex");
}

}  // namespace degpart
