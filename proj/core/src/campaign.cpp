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

#include "degpart/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include "degpart/error.hpp"
#include "degpart/instance.hpp"
#include "degpart/solver.hpp"
#include "json.hpp"

namespace degpart {

namespace {

struct InstanceResult {
  bool unplantable = false;
  std::optional<std::string> error;
  bool holds = false;
  SolveStatus status = SolveStatus::Unknown;
  bool by_local_search = false;
  std::optional<CampaignCase> violation;
  std::optional<CampaignCase> witness;
};

InstanceResult run_one(const CampaignConfig& cfg, std::size_t index) {
  InstanceResult r;
  const std::uint64_t seed = mix_seed(cfg.seed, index);
  Rng rng(seed);
  const std::size_t n = cfg.n_min + uniform_below(rng, cfg.n_max - cfg.n_min + 1);
  try {
    Graph g = generate_graph(n, cfg.p, mix_seed(seed, 1));
    DemandPair d;
    try {
      d = plant_demands(g, cfg.variant, cfg.mode, mix_seed(seed, 2), cfg.weaken, cfg.b3_variant);
    } catch (const Error& e) {
      if (e.code() != Errc::Unplantable) throw;
      r.unplantable = true;
      return r;
    }
    SolveConfig sc;
    sc.pattern = plant_pattern(cfg.variant);
    sc.b3_variant = cfg.b3_variant;
    sc.seed = mix_seed(seed, 3);
    sc.restarts = cfg.restarts;
    sc.oracle_limit = cfg.oracle_limit;
    const SolveOutcome out = solve(g, d, sc);
    r.holds = target_holds(out.hypothesis, cfg.variant);
    r.status = out.status;
    r.by_local_search = out.stats.found_by_local_search;

    if (out.status == SolveStatus::NoneExists) {
      auto make_case = [&](const char* kind) {
        Instance inst = make_instance(g, d);
        inst.meta = {{"kind", kind},
                     {"index", std::to_string(index)},
                     {"seed", std::to_string(seed)},
                     {"variant", std::string(plant_variant_name(cfg.variant))},
                     {"weaken", std::string(weaken_name(cfg.weaken))}};
        return CampaignCase{index, seed, g.order(), g.edge_count(), serialize_instance(inst)};
      };
      if (r.holds || out.theorem_violation) {
        r.violation = make_case("violation");
      } else if (cfg.weaken != Weaken::None) {
        r.witness = make_case("witness");
      }
    }
  } catch (const Error& e) {
    r.error = "instance " + std::to_string(index) + ": " + e.what();
  }
  return r;
}

}  // namespace

void CampaignConfig::validate() const {
  if (n_min > n_max) throw Error(Errc::InvalidArgument, "n_min exceeds n_max");
  if (n_max < 2) throw Error(Errc::InvalidArgument, "n_max must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "edge probability must lie in [0, 1]");
  if (n_max > oracle_limit) {
    throw Error(Errc::InvalidArgument, "n_max " + std::to_string(n_max) + " exceeds the oracle limit " +
                                           std::to_string(oracle_limit) + "; verification needs ground truth");
  }
}

double CampaignReport::local_search_only_success_rate() const noexcept {
  return found == 0 ? 0.0 : static_cast<double>(found_by_local_search) / static_cast<double>(found);
}

std::string CampaignReport::to_json() const {
  using Json = nlohmann::ordered_json;
  Json cfg;
  cfg["n_min"] = config.n_min;
  cfg["n_max"] = config.n_max;
  cfg["p"] = config.p;
  cfg["count"] = config.count;
  cfg["variant"] = plant_variant_name(config.variant);
  cfg["mode"] = plant_mode_name(config.mode);
  cfg["weaken"] = weaken_name(config.weaken);
  cfg["seed"] = config.seed;
  cfg["oracle_limit"] = config.oracle_limit;
  cfg["restarts"] = config.restarts;
  cfg["b3_variant"] = b3_variant_name(config.b3_variant);

  auto cases = [](const std::vector<CampaignCase>& list) {
    Json arr = Json::array();
    for (const auto& c : list) arr.push_back(Json{{"index", c.index}, {"seed", c.seed}, {"n", c.n}, {"m", c.m}});
    return arr;
  };

  Json j;
  j["config"] = cfg;
  j["instances"] = instances;
  j["unplantable"] = unplantable;
  j["errors"] = errors;
  j["error_messages"] = error_messages;
  j["hypothesis_holds"] = hypothesis_holds;
  j["found"] = found;
  j["none_exists"] = none_exists;
  j["unknown"] = unknown;
  j["found_by_local_search"] = found_by_local_search;
  j["local_search_only_success_rate"] = local_search_only_success_rate();
  j["violations"] = cases(violations);
  j["tightness_witnesses"] = cases(witnesses);
  return j.dump(2) + "\n";
}

CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  std::vector<InstanceResult> results(config.count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) results[i] = run_one(config, i);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CampaignReport report;
  report.config = config;
  report.instances = config.count;
  for (auto& r : results) {
    if (r.unplantable) {
      ++report.unplantable;
      continue;
    }
    if (r.error) {
      ++report.errors;
      report.error_messages.push_back(std::move(*r.error));
      continue;
    }
    report.hypothesis_holds += r.holds ? 1 : 0;
    switch (r.status) {
      case SolveStatus::Found:
        ++report.found;
        report.found_by_local_search += r.by_local_search ? 1 : 0;
        break;
      case SolveStatus::NoneExists: ++report.none_exists; break;
      case SolveStatus::Unknown: ++report.unknown; break;
    }
    if (r.violation) report.violations.push_back(std::move(*r.violation));
    if (r.witness) report.witnesses.push_back(std::move(*r.witness));
  }
  return report;
}

void dump_cases(const CampaignReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::vector<CampaignCase>& list, const char* prefix) {
    for (const auto& c : list) {
      const auto path = std::filesystem::path(dir) / (std::string(prefix) + "_" + std::to_string(c.index) + ".inst");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
      out << c.instance_text;
    }
  };
  write(report.violations, "violation");
  write(report.witnesses, "witness");
}

}  // namespace degpart
