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

#include "degpart/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "degpart/error.hpp"

namespace degpart {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const auto tail = universe & 63; tail != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (const Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe of " + std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  std::size_t total = 0;
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i) total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return total;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(Errc::InvalidArgument, "vertex sets over different universes (" + std::to_string(universe_) +
                                           " vs " + std::to_string(other.universe_) + ")");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace degpart
