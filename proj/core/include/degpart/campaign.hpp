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
#include <string>
#include <vector>

#include "degpart/generate.hpp"
#include "degpart/patterns.hpp"

namespace degpart {

struct CampaignConfig {
  std::size_t n_min = 5;
  std::size_t n_max = 10;
  double p = 0.5;
  std::size_t count = 100;
  PlantVariant variant = PlantVariant::MainI;
  PlantMode mode = PlantMode::Tight;
  Weaken weaken = Weaken::None;
  std::uint64_t seed = 1;
  std::size_t oracle_limit = 24;
  std::size_t restarts = 8;
  B3Variant b3_variant = B3Variant::Loose;
  /// Worker threads; the report does not depend on this.
  std::size_t threads = 1;

  /// Throws InvalidArgument on an empty or inverted n range, p outside [0,1],
  /// n_max < 2 or n_max above the oracle limit.
  void validate() const;
};

/// One generated instance worth keeping (a violation or a tightness witness).
struct CampaignCase {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  /// serialize_instance text, ready to be written out and replayed.
  std::string instance_text;
};

struct CampaignReport {
  CampaignConfig config;
  std::size_t instances = 0;
  std::size_t unplantable = 0;
  /// Instances that raised a library error; the campaign carries on.
  std::size_t errors = 0;
  std::vector<std::string> error_messages;
  std::size_t hypothesis_holds = 0;
  std::size_t found = 0;
  std::size_t none_exists = 0;
  std::size_t unknown = 0;
  std::size_t found_by_local_search = 0;
  /// Target hypothesis held and no feasible partition exists.
  std::vector<CampaignCase> violations;
  /// Weakened runs only: planted instances with no feasible partition.
  std::vector<CampaignCase> witnesses;

  double local_search_only_success_rate() const noexcept;

  /// Deterministic JSON rendering with keys in a fixed order.
  std::string to_json() const;
};

CampaignReport run_campaign(const CampaignConfig& config);

/// Writes every violation and witness as <dir>/<kind>_<index>.inst.
void dump_cases(const CampaignReport& report, const std::string& dir);

}  // namespace degpart
