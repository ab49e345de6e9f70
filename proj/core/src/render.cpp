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

#include <sstream>

#include "json.hpp"

#include "degpart/instance.hpp"

namespace degpart {

namespace {

using Json = nlohmann::ordered_json;

Json ids(const VertexSet& s) { return Json(s.to_vector()); }

std::string id_line(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  s.for_each([&](Vertex v) {
    out << (first ? "" : " ") << v;
    first = false;
  });
  return out.str();
}

Json check_json(const TheoremCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["failing"] = ids(c.failing);
  j["reason"] = c.reason;
  return j;
}

Json hypotheses_json(const HypothesisReport& r) {
  Json j;
  j["A"] = check_json(r.thm_a);
  j["B"] = check_json(r.thm_b);
  j["C"] = check_json(r.thm_c);
  j["D"] = check_json(r.thm_d);
  j["main_i"] = check_json(r.main_i);
  j["main_ii"] = check_json(r.main_ii);
  j["n_at_least_5"] = r.n_at_least_5;
  return j;
}

void hypotheses_text(std::ostream& out, const HypothesisReport& r) {
  const std::pair<const char*, const TheoremCheck*> rows[] = {{"A", &r.thm_a},      {"B", &r.thm_b},
                                                              {"C", &r.thm_c},      {"D", &r.thm_d},
                                                              {"main_i", &r.main_i}, {"main_ii", &r.main_ii}};
  for (const auto& [name, check] : rows) {
    out << "hypothesis " << name << ": " << (check->holds ? "holds" : "fails");
    if (!check->holds) out << " (" << check->reason << ")";
    out << '\n';
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_outcome(const SolveOutcome& o, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["status"] = status_name(o.status);
    if (o.partition) {
      j["x1"] = ids(o.partition->x1);
      j["x2"] = ids(o.partition->x2);
      j["omega"] = o.omega;
    } else {
      j["x1"] = nullptr;
      j["x2"] = nullptr;
      j["omega"] = nullptr;
    }
    j["hypotheses"] = hypotheses_json(o.hypothesis);
    Json stats;
    stats["moves"] = o.stats.moves;
    stats["restarts"] = o.stats.restarts;
    stats["oracle_used"] = o.stats.oracle_used;
    stats["found_by_local_search"] = o.stats.found_by_local_search;
    j["stats"] = stats;
    j["theorem_violation"] = o.theorem_violation;
    return dump(j);
  }
  std::ostringstream out;
  out << "status: " << status_name(o.status) << '\n';
  if (o.partition) {
    out << "x1: " << id_line(o.partition->x1) << '\n';
    out << "x2: " << id_line(o.partition->x2) << '\n';
    out << "omega: " << o.omega << '\n';
  }
  hypotheses_text(out, o.hypothesis);
  out << "stats: moves=" << o.stats.moves << " restarts=" << o.stats.restarts
      << " oracle_used=" << (o.stats.oracle_used ? "true" : "false")
      << " found_by_local_search=" << (o.stats.found_by_local_search ? "true" : "false") << '\n';
  if (o.theorem_violation) out << "COUNTEREXAMPLE: hypothesis holds but no feasible partition exists\n";
  return out.str();
}

std::string serialize_hypotheses(const HypothesisReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j = hypotheses_json(r);
    j["t1_b3"] = ids(r.book.t1);
    j["t1_k23"] = ids(r.k23.t1);
    j["s1"] = ids(r.s1);
    return dump(j);
  }
  std::ostringstream out;
  out << "n >= 5: " << (r.n_at_least_5 ? "yes" : "no") << '\n';
  out << "t1 (b3): " << id_line(r.book.t1) << '\n';
  out << "t1 (k23): " << id_line(r.k23.t1) << '\n';
  out << "s1: " << id_line(r.s1) << '\n';
  hypotheses_text(out, r);
  return out.str();
}

std::string serialize_classification(const Classification& c, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["pattern"] = pattern_name(c.kind);
    j["t1"] = ids(c.t1);
    j["h"] = c.h.h;
    return dump(j);
  }
  std::ostringstream out;
  out << "pattern: " << pattern_name(c.kind) << '\n';
  out << "t1: " << id_line(c.t1) << '\n';
  out << "t0: " << id_line(c.t1.complement()) << '\n';
  return out.str();
}

std::string serialize_vertex_set(const VertexSet& set, PatternKind kind, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["pattern"] = pattern_name(kind);
    j[std::string(pattern_name(kind))] = ids(set);
    return dump(j);
  }
  return "pattern: " + std::string(pattern_name(kind)) + "\n" + std::string(pattern_name(kind)) + ": " +
         id_line(set) + "\n";
}

}  // namespace degpart
