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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace degpart {

using Vertex = std::uint32_t;

/// Dense bitset over the vertex universe 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  std::size_t intersection_size(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Ascending id order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;

 private:
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace degpart
