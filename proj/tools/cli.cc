// Copyright 2026 The Valet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "valet/agents.h"
#include "valet/engine.h"
#include "valet/errors.h"
#include "valet/harness.h"
#include "valet/infoflow.h"
#include "valet/registry.h"

namespace valet {
namespace {

// A usage error detected after flag parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t ParseSeed(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(what + " must be an unsigned 64-bit integer, got '" +
                     text + "'");
  }
  return value;
}

// --seed wins over VALET_SEED; both absent means 0.
std::uint64_t ResolveSeed(const std::optional<std::string>& flag) {
  if (flag) return ParseSeed(*flag, "--seed");
  if (const char* env = std::getenv("VALET_SEED"); env != nullptr) {
    return ParseSeed(env, "VALET_SEED");
  }
  return 0;
}

std::string ResolveGame(const std::string& name) {
  try {
    return LookupGame(name)->metadata().id;
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

std::vector<AgentSpec> ParseAgents(const std::string& text,
                                   const GameMetadata& metadata) {
  std::vector<AgentSpec> agents;
  for (const std::string& part : SplitTopLevel(text)) {
    try {
      agents.push_back(ParseAgentSpec(part));
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  if (static_cast<int>(agents.size()) != metadata.players) {
    throw UsageError("--agents: " + metadata.id + " needs exactly " +
                     std::to_string(metadata.players) + " agents, got " +
                     std::to_string(agents.size()));
  }
  return agents;
}

// Folder name for a simulate run: the experiment condition names when the
// seats match them, otherwise the agent kinds joined by dashes.
std::string ConditionName(const std::vector<AgentSpec>& agents) {
  const auto is_random = [](const AgentSpec& a) {
    return a.kind == AgentSpec::Kind::kRandom;
  };
  if (std::all_of(agents.begin(), agents.end(), is_random)) {
    return std::string(kRandomCondition);
  }
  if (!is_random(agents[0]) &&
      std::all_of(agents.begin() + 1, agents.end(), is_random)) {
    return std::string(kMctsCondition);
  }
  std::string name;
  for (const AgentSpec& a : agents) {
    if (!name.empty()) name += "-";
    name += is_random(a) ? "random" : "mcts";
  }
  return name;
}

void CheckCount(int n, const std::string& flag) {
  if (n < 0) throw UsageError(flag + " must be non-negative");
}

void CheckJobs(int jobs) {
  if (jobs < 0) throw UsageError("--jobs must be non-negative");
}

}  // namespace

std::vector<std::string> SplitTopLevel(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Simulate and analyze imperfect-information card games.",
               "valet"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // list
  bool list_json = false;
  auto* list = app.add_subcommand("list", "List the registered games");
  list->add_flag("--json", list_json, "Print the metadata table as JSON");

  // simulate
  std::string sim_game;
  std::string sim_agents;
  int sim_n = 1;
  std::optional<std::string> sim_seed;
  std::string sim_out;
  int sim_jobs = 0;
  auto* simulate =
      app.add_subcommand("simulate", "Play games and write JSONL records");
  simulate->add_option("--game", sim_game, "Game id or name")->required();
  simulate->add_option("--agents", sim_agents,
                       "One agent per seat, e.g. mcts,random,random,random "
                       "or mcts(d=10,b=100,c=1.414),random");
  simulate->add_option("--n", sim_n, "Number of playthroughs");
  simulate->add_option("--seed", sim_seed, "Master seed (else VALET_SEED)");
  simulate->add_option("--out", sim_out,
                       "Output directory; records go to stdout when absent");
  simulate->add_option("--jobs", sim_jobs, "Worker threads (0 = all cores)");

  // analyze
  std::string an_in;
  std::string an_out;
  auto* analyze = app.add_subcommand(
      "analyze", "Compute metrics CSVs and summary.json from JSONL records");
  analyze->add_option("dir", an_in, "Directory holding <game>/<cond>/*.jsonl")
      ->required();
  analyze->add_option("--out", an_out, "Output directory (default: dir)");

  // infoflow
  std::string if_game;
  int if_n = 100;
  std::optional<std::string> if_seed;
  std::string if_out;
  std::string if_json;
  auto* infoflow = app.add_subcommand(
      "infoflow", "Export the card-movement graph and information labels");
  infoflow->add_option("--game", if_game, "Game id or name")->required();
  infoflow->add_option("--n", if_n, "Number of random playthroughs");
  infoflow->add_option("--seed", if_seed, "Master seed (else VALET_SEED)");
  infoflow->add_option("--out", if_out,
                       "DOT output file; DOT goes to stdout when absent");
  infoflow->add_option("--json", if_json, "JSON adjacency output file");

  // experiment
  std::string ex_games = "all";
  int ex_n = 100;
  std::optional<std::string> ex_seed;
  std::string ex_out;
  int ex_jobs = 0;
  std::string ex_mcts = "mcts";
  std::string ex_conditions = "random,mcts";
  bool ex_progress = false;
  auto* experiment = app.add_subcommand(
      "experiment", "Run the random and MCTS conditions for many games");
  experiment->add_option("--games", ex_games,
                         "Comma-separated game ids, or all");
  experiment->add_option("--n", ex_n, "Sims per game and condition");
  experiment->add_option("--seed", ex_seed, "Master seed (else VALET_SEED)");
  experiment->add_option("--out", ex_out, "Output directory")->required();
  experiment->add_option("--jobs", ex_jobs, "Worker threads (0 = all cores)");
  experiment->add_option("--mcts", ex_mcts,
                         "MCTS agent spec, e.g. mcts(d=10,b=100)");
  experiment->add_option("--conditions", ex_conditions,
                         "Comma-separated subset of random,mcts");
  experiment->add_flag("--progress", ex_progress, "Report progress on stderr");

  // CLI11 wants the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.back()->help());
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == list) {
      if (list_json) {
        out << MetadataJson();
        return kExitOk;
      }
      for (const GameMetadata& m : Registry()) {
        out << m.id << "\t" << m.name << "\t" << m.players
            << (m.players == 1 ? " player\t" : " players\t")
            << m.info.ToString() << "\n";
      }
      return kExitOk;
    }

    if (active == simulate) {
      const std::string id = ResolveGame(sim_game);
      const GameMetadata& metadata = LookupGame(id)->metadata();
      if (sim_agents.empty()) {
        sim_agents = "random";
        for (int p = 1; p < metadata.players; ++p) sim_agents += ",random";
      }
      const auto agents = ParseAgents(sim_agents, metadata);
      CheckCount(sim_n, "--n");
      CheckJobs(sim_jobs);
      const std::uint64_t seed = ResolveSeed(sim_seed);
      const auto records = Simulate(id, agents, sim_n, seed, sim_jobs);
      if (sim_out.empty()) {
        for (const GameRecord& r : records) out << RecordToJsonl(r);
        return kExitOk;
      }
      const std::string condition = ConditionName(agents);
      for (int i = 0; i < static_cast<int>(records.size()); ++i) {
        WriteTextFile(SimPath(sim_out, id, condition, i),
                      RecordToJsonl(records[i]));
      }
      out << "wrote " << records.size() << " records to "
          << (std::filesystem::path(sim_out) / id / condition).string()
          << "\n";
      return kExitOk;
    }

    if (active == analyze) {
      const std::filesystem::path dir = an_in;
      if (!std::filesystem::is_directory(dir)) {
        throw UsageError("not a directory: " + an_in);
      }
      auto sims = LoadSims(dir);
      const int count = static_cast<int>(sims.size());
      const ExperimentResult result = Analyze(std::move(sims));
      const std::filesystem::path target =
          an_out.empty() ? dir : std::filesystem::path(an_out);
      WriteMetrics(result, target);
      out << "analyzed " << count << " records into " << target.string()
          << "\n";
      return kExitOk;
    }

    if (active == infoflow) {
      const std::string id = ResolveGame(if_game);
      const auto game = LookupGame(id);
      if (if_n < 1) throw UsageError("--n must be at least 1");
      std::vector<AgentSpec> agents(game->metadata().players);
      const auto records = Simulate(id, agents, if_n, ResolveSeed(if_seed));
      const FlowGraph graph = BuildGraph(*game, records);
      const std::string dot = ToDot(graph);
      if (!if_json.empty()) WriteTextFile(if_json, ToJson(graph));
      if (if_out.empty()) {
        out << dot;
      } else {
        WriteTextFile(if_out, dot);
        out << id << ": "
            << Classify(graph, game->metadata()).ToString() << "\n";
      }
      return kExitOk;
    }

    if (active == experiment) {
      ExperimentPlan plan;
      if (ex_games == "all") {
        plan.games = GameIds();
      } else {
        for (const std::string& g : SplitTopLevel(ex_games)) {
          plan.games.push_back(ResolveGame(g));
        }
      }
      plan.conditions.clear();
      for (const std::string& c : SplitTopLevel(ex_conditions)) {
        if (c != kRandomCondition && c != kMctsCondition) {
          throw UsageError("--conditions: unknown condition '" + c +
                           "'; expected random or mcts");
        }
        plan.conditions.push_back(c);
      }
      AgentSpec mcts;
      try {
        mcts = ParseAgentSpec(ex_mcts);
      } catch (const ConfigError& e) {
        throw UsageError(e.what());
      }
      if (mcts.kind != AgentSpec::Kind::kMcts) {
        throw UsageError("--mcts must be an mcts(...) spec");
      }
      CheckCount(ex_n, "--n");
      CheckJobs(ex_jobs);
      plan.n_per_condition = ex_n;
      plan.master_seed = ResolveSeed(ex_seed);
      plan.mcts = mcts.mcts;
      plan.jobs = ex_jobs;
      plan.out_dir = ex_out;
      if (ex_progress) {
        plan.progress = [&err](int done, int total) {
          err << "\r" << done << "/" << total << std::flush;
          if (done == total) err << "\n";
        };
      }
      const ExperimentResult result = RunExperiment(plan);
      out << "ran " << result.sims.size() << " sims into " << ex_out << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace valet
