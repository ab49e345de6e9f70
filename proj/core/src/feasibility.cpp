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

#include "degpart/feasibility.hpp"

#include <deque>
#include <string>

#include "degpart/error.hpp"

namespace degpart {

namespace {

void require_nonempty(const VertexSet& x, const char* what) {
  if (x.empty()) throw Error(Errc::EmptySet, std::string(what) + " is only defined for non-empty sets");
}

void require_length(std::size_t got, std::size_t n, const char* what) {
  if (got != n) {
    throw Error(Errc::InvalidArgument,
                std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(n));
  }
}

std::int64_t degree_in(const Graph& g, Vertex u, const VertexSet& x) {
  return static_cast<std::int64_t>(g.degree_in(u, x));
}

}  // namespace

DemandPair DemandPair::uniform(std::size_t n, std::int64_t a_value, std::int64_t b_value) {
  return DemandPair{std::vector<std::int64_t>(n, a_value), std::vector<std::int64_t>(n, b_value)};
}

void DemandPair::validate(std::size_t n) const {
  require_length(a.size(), n, "demand a");
  require_length(b.size(), n, "demand b");
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto value : {a[u], b[u]}) {
      if (value < 0 || value > kMaxDemand) {
        throw Error(Errc::InvalidArgument,
                    "demand " + std::to_string(value) + " at vertex " + std::to_string(u) + " outside [0, 2^40]");
      }
    }
  }
}

HVector HVector::from_set(const VertexSet& t1) {
  HVector out = zeros(t1.universe());
  t1.for_each([&](Vertex u) { out.h[u] = 1; });
  return out;
}

Threshold Threshold::plus(std::int64_t delta) const {
  Threshold out = *this;
  for (auto& value : out.f) value += delta;
  return out;
}

Threshold good_threshold(Side side, const DemandPair& d, const HVector& h) {
  if (side == Side::First) return Threshold::first_side(d).plus(1);
  Threshold out = Threshold::second_side(d);
  require_length(h.size(), out.size(), "h vector");
  for (std::size_t u = 0; u < out.size(); ++u) out.f[u] += h.h[u];
  return out;
}

VertexSet bad_vertices(const Graph& g, const VertexSet& x, Side side, const DemandPair& d, const HVector& h) {
  require_length(d.size(), g.order(), "demands");
  VertexSet bad(g.order());
  if (side == Side::First) {
    x.for_each([&](Vertex u) {
      if (degree_in(g, u, x) <= d.a[u]) bad.insert(u);
    });
  } else {
    require_length(h.size(), g.order(), "h vector");
    x.for_each([&](Vertex u) {
      if (degree_in(g, u, x) <= d.b[u] + h[u] - 1) bad.insert(u);
    });
  }
  return bad;
}

VertexSet f_core(const Graph& g, const VertexSet& x, const Threshold& f) {
  require_length(f.size(), g.order(), "threshold");
  VertexSet alive = x;
  std::vector<std::int64_t> deg(g.order(), 0);
  std::vector<char> queued(g.order(), 0);
  std::deque<Vertex> work;
  x.for_each([&](Vertex u) {
    deg[u] = degree_in(g, u, x);
    if (deg[u] < f[u]) {
      queued[u] = 1;
      work.push_back(u);
    }
  });
  while (!work.empty()) {
    const Vertex u = work.front();
    work.pop_front();
    alive.erase(u);
    for (const Vertex w : g.neighbor_list(u)) {
      if (!alive.contains(w)) continue;
      if (--deg[w] < f[w] && queued[w] == 0) {
        queued[w] = 1;
        work.push_back(w);
      }
    }
  }
  return alive;
}

bool is_good(const Graph& g, const VertexSet& x, Side side, const DemandPair& d, const HVector& h) {
  require_nonempty(x, "is_good");
  return bad_vertices(g, x, side, d, h).empty();
}

bool is_meager(const Graph& g, const VertexSet& x, Side side, const DemandPair& d, const HVector& h) {
  require_nonempty(x, "is_meager");
  return f_core(g, x, good_threshold(side, d, h)).empty();
}

bool is_nice(const Graph& g, const VertexSet& x, const Threshold& f) {
  require_nonempty(x, "is_nice");
  require_length(f.size(), g.order(), "threshold");
  bool ok = true;
  x.for_each([&](Vertex u) { ok = ok && degree_in(g, u, x) >= f[u]; });
  return ok;
}

bool is_degenerate_set(const Graph& g, const VertexSet& x, const Threshold& f) {
  require_nonempty(x, "is_degenerate_set");
  return f_core(g, x, f.plus(1)).empty();
}

bool is_feasible_pair(const Graph& g, const VertexSet& a_side, const VertexSet& b_side, const DemandPair& d) {
  if (a_side.empty() || b_side.empty() || a_side.intersects(b_side)) return false;
  return is_nice(g, a_side, Threshold::first_side(d)) && is_nice(g, b_side, Threshold::second_side(d));
}

bool is_feasible_partition(const Graph& g, const Partition& p, const DemandPair& d) {
  p.validate(g.order());
  return is_feasible_pair(g, p.x1, p.x2, d);
}

Partition extend_pair_to_partition(const Graph& g, const DemandPair& d, const VertexSet& a_side,
                                   const VertexSet& b_side) {
  const std::size_t n = g.order();
  d.validate(n);
  for (Vertex u = 0; u < n; ++u) {
    if (static_cast<std::int64_t>(g.degree(u)) < d.a[u] + d.b[u]) {
      throw Error(Errc::PreconditionViolated, "pair extension needs d(u) >= a(u)+b(u); fails at vertex " +
                                                  std::to_string(u));
    }
  }
  if (!is_feasible_pair(g, a_side, b_side, d)) {
    throw Error(Errc::PreconditionViolated, "pair extension needs an (a,b)-feasible pair as input");
  }

  VertexSet grown = a_side;
  const VertexSet fixed = a_side | b_side;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (fixed.contains(v) || grown.contains(v)) continue;
      if (degree_in(g, v, grown) >= d.a[v]) {
        grown.insert(v);
        changed = true;
      }
    }
  }

  Partition out = Partition::from_first(grown);
  if (!is_feasible_partition(g, out, d)) {
    throw Error(Errc::InternalInvariant, "extended pair is not a feasible partition");
  }
  return out;
}

}  // namespace degpart
