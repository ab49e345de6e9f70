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

#include "cli.hpp"

#include <map>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "degpart/campaign.hpp"
#include "degpart/error.hpp"
#include "degpart/instance.hpp"
#include "degpart/solver.hpp"

namespace degpart::cli {

namespace {

const std::map<std::string, PatternKind> kPatterns{
    {"b3", PatternKind::BookB3}, {"k23", PatternKind::K23}, {"s1", PatternKind::CyclePairS1}};
const std::map<std::string, B3Variant> kB3Variants{{"strict", B3Variant::Strict}, {"loose", B3Variant::Loose}};
const std::map<std::string, PlantVariant> kPlantVariants{
    {"main_i", PlantVariant::MainI}, {"main_ii", PlantVariant::MainII}, {"thmA", PlantVariant::ThmA}};
const std::map<std::string, PlantMode> kModes{{"tight", PlantMode::Tight}, {"slack", PlantMode::Slack}};
const std::map<std::string, Weaken> kWeakenings{{"drop_h", Weaken::DropH}, {"relax_min", Weaken::RelaxMin}};

struct InputOptions {
  std::string file;
  std::vector<std::int64_t> demands;
  bool json = false;
  std::string b3_variant = "loose";

  void attach(CLI::App* cmd, bool file_required = true) {
    auto* opt = cmd->add_option("file", file, "Instance file");
    if (file_required) opt->required();
    cmd->add_option("--demands", demands, "Default a b for vertices without 'd' lines")->expected(2);
    cmd->add_flag("--json", json, "Emit JSON");
    cmd->add_option("--b3-variant", b3_variant, "Book pattern reading")
        ->check(CLI::IsMember({"strict", "loose"}));
  }

  Instance load(std::optional<std::pair<std::int64_t, std::int64_t>> fallback = std::nullopt) const {
    ParseOptions po;
    po.default_demands = fallback;
    if (demands.size() == 2) po.default_demands = std::make_pair(demands[0], demands[1]);
    return read_instance_file(file, po);
  }

  OutputFormat format() const { return json ? OutputFormat::Json : OutputFormat::Text; }
  B3Variant variant() const { return kB3Variants.at(b3_variant); }
};

struct CampaignOptions {
  CampaignConfig cfg;
  std::string variant = "main_i";
  std::string mode = "tight";
  std::string b3_variant = "loose";
  std::string dump_dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n-min", cfg.n_min, "Smallest vertex count")->capture_default_str();
    cmd->add_option("--n-max", cfg.n_max, "Largest vertex count")->capture_default_str();
    cmd->add_option("--p", cfg.p, "Edge probability")->capture_default_str();
    cmd->add_option("--count", cfg.count, "Number of instances")->capture_default_str();
    cmd->add_option("--variant", variant, "Planted hypothesis")->check(CLI::IsMember({"main_i", "main_ii", "thmA"}));
    cmd->add_option("--mode", mode, "Demand planting mode")->check(CLI::IsMember({"tight", "slack"}));
    cmd->add_option("--seed", cfg.seed, "Campaign seed")->capture_default_str();
    cmd->add_option("--oracle-limit", cfg.oracle_limit, "Largest n for the exhaustive oracle")->capture_default_str();
    cmd->add_option("--restarts", cfg.restarts, "Random restarts per instance")->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
    cmd->add_option("--b3-variant", b3_variant, "Book pattern reading")->check(CLI::IsMember({"strict", "loose"}));
    cmd->add_option("--dump-dir", dump_dir, "Directory for violation / witness instance files");
  }

  CampaignConfig resolve() {
    cfg.variant = kPlantVariants.at(variant);
    cfg.mode = kModes.at(mode);
    cfg.b3_variant = kB3Variants.at(b3_variant);
    return cfg;
  }
};

int campaign_exit(const CampaignReport& report) {
  return report.violations.empty() ? kFound : kTheoremViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-constrained vertex bipartitions: classify, check, solve and verify", "degpart"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "List T1 vertices for a prescribed pattern");
  InputOptions classify_in;
  std::string classify_pattern = "b3";
  classify_in.attach(classify_cmd);
  classify_cmd->add_option("--pattern", classify_pattern, "b3, k23 or s1")
      ->check(CLI::IsMember({"b3", "k23", "s1"}));

  auto* check_cmd = app.add_subcommand("check", "Evaluate every theorem hypothesis");
  InputOptions check_in;
  check_in.attach(check_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Find an (a,b)-feasible partition");
  InputOptions solve_in;
  solve_in.attach(solve_cmd, false);
  SolveConfig solve_cfg;
  std::string solve_pattern = "b3";
  std::string replay;
  bool no_oracle = false;
  solve_cmd->add_option("--replay", replay, "Replay a dumped instance file");
  solve_cmd->add_option("--pattern", solve_pattern, "b3 or k23")->check(CLI::IsMember({"b3", "k23"}));
  solve_cmd->add_option("--seed", solve_cfg.seed, "Restart seed")->capture_default_str();
  solve_cmd->add_option("--budget", solve_cfg.budget, "Moves per local search (0 = default)");
  solve_cmd->add_option("--restarts", solve_cfg.restarts, "Random restarts")->capture_default_str();
  solve_cmd->add_option("--oracle-limit", solve_cfg.oracle_limit, "Largest n for the oracle")->capture_default_str();
  solve_cmd->add_option("--allow-neutral-swaps", solve_cfg.allow_neutral_swaps, "Plateau swaps per search");
  solve_cmd->add_flag("--no-oracle", no_oracle, "Never fall back to exhaustive search");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive existence check");
  InputOptions oracle_in;
  std::size_t oracle_limit = kDefaultOracleLimit;
  oracle_in.attach(oracle_cmd);
  oracle_cmd->add_option("--oracle-limit", oracle_limit, "Largest n accepted")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Seeded verification campaign on planted instances");
  CampaignOptions verify_opts;
  verify_opts.attach(verify_cmd);

  auto* mine_cmd = app.add_subcommand("mine", "Search weakened hypotheses for tightness witnesses");
  CampaignOptions mine_opts;
  std::string weaken = "drop_h";
  mine_opts.attach(mine_cmd);
  mine_cmd->add_option("--weaken", weaken, "drop_h or relax_min")
      ->required()
      ->check(CLI::IsMember({"drop_h", "relax_min"}));

  std::vector<std::string> argv_store{"degpart"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFound;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*classify_cmd) {
      const Instance inst = classify_in.load(std::make_pair(0, 0));
      const PatternKind kind = kPatterns.at(classify_pattern);
      if (kind == PatternKind::CyclePairS1) {
        out << serialize_vertex_set(s1_vertices(inst.graph), kind, classify_in.format());
      } else {
        out << serialize_classification(classify(inst.graph, kind, classify_in.variant()), classify_in.format());
      }
      return kFound;
    }
    if (*check_cmd) {
      const Instance inst = check_in.load();
      out << serialize_hypotheses(hypothesis_report(inst.graph, inst.demands, check_in.variant()), check_in.format());
      return kFound;
    }
    if (*solve_cmd) {
      if (!replay.empty()) solve_in.file = replay;
      if (solve_in.file.empty()) {
        err << "solve: an instance FILE or --replay FILE is required\n";
        return kInputError;
      }
      const Instance inst = solve_in.load();
      solve_cfg.pattern = kPatterns.at(solve_pattern);
      solve_cfg.b3_variant = solve_in.variant();
      solve_cfg.use_oracle = !no_oracle;
      const SolveOutcome outcome = solve(inst.graph, inst.demands, solve_cfg);
      out << serialize_outcome(outcome, solve_in.format());
      if (outcome.theorem_violation) {
        err << "COUNTEREXAMPLE: a theorem hypothesis holds but no feasible partition exists\n";
        return kTheoremViolation;
      }
      switch (outcome.status) {
        case SolveStatus::Found: return kFound;
        case SolveStatus::NoneExists: return kNoneExists;
        case SolveStatus::Unknown: return kUnknown;
      }
    }
    if (*oracle_cmd) {
      const Instance inst = oracle_in.load();
      SolveOutcome outcome;
      outcome.hypothesis = hypothesis_report(inst.graph, inst.demands, oracle_in.variant());
      OracleResult result = exhaustive_oracle(inst.graph, inst.demands, oracle_limit);
      outcome.stats.oracle_used = true;
      if (result.partition) {
        outcome.status = SolveStatus::Found;
        outcome.omega = weight(inst.graph, inst.demands, *result.partition);
        outcome.partition = std::move(result.partition);
      } else {
        outcome.status = SolveStatus::NoneExists;
        outcome.theorem_violation = outcome.hypothesis.main_i.holds || outcome.hypothesis.main_ii.holds;
      }
      out << serialize_outcome(outcome, oracle_in.format());
      if (outcome.theorem_violation) return kTheoremViolation;
      return outcome.status == SolveStatus::Found ? kFound : kNoneExists;
    }
    if (*verify_cmd) {
      const CampaignReport report = run_campaign(verify_opts.resolve());
      if (!verify_opts.dump_dir.empty()) dump_cases(report, verify_opts.dump_dir);
      out << report.to_json();
      return campaign_exit(report);
    }
    if (*mine_cmd) {
      CampaignConfig cfg = mine_opts.resolve();
      cfg.weaken = kWeakenings.at(weaken);
      const CampaignReport report = run_campaign(cfg);
      if (!mine_opts.dump_dir.empty()) dump_cases(report, mine_opts.dump_dir);
      out << report.to_json();
      return campaign_exit(report);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace degpart::cli
