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

#include "valet/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "nlohmann/json.hpp"
#include "valet/errors.h"
#include "valet/registry.h"

namespace valet {

using Json = nlohmann::ordered_json;

std::uint64_t SimSeed(std::uint64_t master_seed, std::string_view game,
                      std::string_view condition, int index) {
  std::string purpose(game);
  purpose += '/';
  purpose += condition;
  return DeriveSeed(master_seed, purpose, static_cast<std::uint64_t>(index));
}

int ExperimentResult::failures() const {
  return static_cast<int>(
      std::count_if(sims.begin(), sims.end(),
                    [](const SimResult& s) { return !s.ok; }));
}

void ParallelFor(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max(1, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

SimResult RunSim(std::string_view game, std::string_view condition, int index,
                 std::uint64_t seed, const MctsConfig& mcts) {
  SimResult result;
  result.game = std::string(game);
  result.condition = std::string(condition);
  result.sim = index;
  result.seed = seed;
  try {
    std::shared_ptr<const Game> def = LookupGame(game);
    const bool use_mcts = condition == kMctsCondition;
    if (!use_mcts && condition != kRandomCondition) {
      throw ConfigError("unknown condition '" + std::string(condition) + "'");
    }
    std::vector<std::unique_ptr<Agent>> agents;
    MctsAgent* searcher = nullptr;
    for (int p = 0; p < def->num_players(); ++p) {
      const std::uint64_t agent_seed = DeriveSeed(seed, "agent", p);
      if (p == 0 && use_mcts) {
        auto agent = std::make_unique<MctsAgent>(mcts, agent_seed);
        searcher = agent.get();
        agents.push_back(std::move(agent));
      } else {
        agents.push_back(std::make_unique<RandomAgent>(agent_seed));
      }
    }
    std::vector<Agent*> seats;
    for (auto& a : agents) seats.push_back(a.get());
    result.record = Run(def, seed, seats);
    if (searcher != nullptr) result.mcts_stats = searcher->stats();
    result.seat0_utility = Utility(def->metadata(), result.record.scores[0]);
    result.ok = true;
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
  }
  return result;
}

namespace {

Json SummaryJson(const Summary& s) {
  return Json{{"count", s.count}, {"min", s.min},       {"q1", s.q1},
              {"median", s.median}, {"q3", s.q3},       {"max", s.max},
              {"mean", s.mean}};
}

}  // namespace

ExperimentResult Analyze(std::vector<SimResult> sims) {
  ExperimentResult out;
  out.sims = std::move(sims);
  std::vector<LabeledRecord> labeled;
  for (const SimResult& s : out.sims) {
    if (s.ok) labeled.push_back({s.condition, s.sim, &s.record});
  }
  out.branching = ExtractBranching(labeled);
  out.lengths = ExtractLengths(labeled);
  out.scores = ExtractScores(labeled, 0);

  // game -> condition -> sims, in first-seen order.
  std::vector<std::string> game_order;
  std::map<std::string, std::vector<std::string>> condition_order;
  std::map<std::pair<std::string, std::string>, std::vector<const SimResult*>>
      cells;
  for (const SimResult& s : out.sims) {
    if (std::find(game_order.begin(), game_order.end(), s.game) ==
        game_order.end()) {
      game_order.push_back(s.game);
    }
    auto& conds = condition_order[s.game];
    if (std::find(conds.begin(), conds.end(), s.condition) == conds.end()) {
      conds.push_back(s.condition);
    }
    cells[{s.game, s.condition}].push_back(&s);
  }
  Json games = Json::object();
  for (const std::string& game : game_order) {
    Json per_game = Json::object();
    for (const std::string& cond : condition_order[game]) {
      const auto& list = cells[{game, cond}];
      std::vector<double> lengths, scores, utilities;
      Json failed = Json::array();
      for (const SimResult* s : list) {
        if (!s->ok) {
          failed.push_back(Json{{"sim", s->sim}, {"seed", s->seed},
                                {"error", s->error}});
          continue;
        }
        lengths.push_back(s->record.NumDecisions());
        scores.push_back(s->record.scores[0]);
        utilities.push_back(s->seat0_utility);
      }
      Json cell{{"expected", list.size()},
                {"completed", lengths.size()},
                {"complete", lengths.size() == list.size()}};
      if (!lengths.empty()) {
        cell["length"] = SummaryJson(Summarize(lengths));
        cell["seat0_score"] = SummaryJson(Summarize(scores));
        cell["seat0_utility_mean"] = Summarize(utilities).mean;
      }
      if (!failed.empty()) cell["failures"] = failed;
      per_game[cond] = std::move(cell);
    }
    games[game] = std::move(per_game);
  }
  out.summary_json = Json{{"games", games}}.dump(2) + "\n";
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
  if (!f) throw Error("cannot write " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void WriteOutputs(const ExperimentResult& result,
                  const std::filesystem::path& out_dir) {
  for (const SimResult& s : result.sims) {
    if (!s.ok) continue;
    WriteTextFile(SimPath(out_dir, s.game, s.condition, s.sim),
                  RecordToJsonl(s.record));
  }
  WriteMetrics(result, out_dir);
}

void WriteMetrics(const ExperimentResult& result,
                  const std::filesystem::path& out_dir) {
  const auto metrics = out_dir / "metrics";
  WriteTextFile(metrics / "branching.csv", BranchingCsv(result.branching));
  WriteTextFile(metrics / "lengths.csv", LengthsCsv(result.lengths));
  WriteTextFile(metrics / "scores.csv", ScoresCsv(result.scores));
  WriteTextFile(out_dir / "summary.json", result.summary_json);
}

std::filesystem::path SimPath(const std::filesystem::path& out_dir,
                              std::string_view game,
                              std::string_view condition, int index) {
  return out_dir / std::string(game) / std::string(condition) /
         ("sim" + std::to_string(index) + ".jsonl");
}

std::vector<SimResult> LoadSims(const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(out_dir)) {
    throw ArgumentError("not a directory: " + out_dir.string());
  }
  std::vector<SimResult> sims;
  for (const auto& game_dir : fs::directory_iterator(out_dir)) {
    if (!game_dir.is_directory()) continue;
    const std::string game = game_dir.path().filename().string();
    if (game == "metrics") continue;
    for (const auto& cond_dir : fs::directory_iterator(game_dir.path())) {
      if (!cond_dir.is_directory()) continue;
      for (const auto& file : fs::directory_iterator(cond_dir.path())) {
        const std::string name = file.path().filename().string();
        if (!file.is_regular_file() || !name.starts_with("sim") ||
            !name.ends_with(".jsonl")) {
          continue;
        }
        int index = 0;
        const std::string digits = name.substr(3, name.size() - 9);
        const auto [end, ec] = std::from_chars(
            digits.data(), digits.data() + digits.size(), index);
        if (digits.empty() || ec != std::errc() ||
            end != digits.data() + digits.size()) {
          continue;
        }
        SimResult s;
        s.condition = cond_dir.path().filename().string();
        s.sim = index;
        try {
          s.record = RecordFromJsonl(ReadTextFile(file.path()));
        } catch (const ParseError& e) {
          throw ParseError(file.path().string() + ": " + e.what());
        }
        s.game = s.record.game;
        s.seed = s.record.seed;
        s.ok = true;
        const auto game_ptr = LookupGame(s.game);
        if (s.record.scores.empty()) {
          throw ParseError(file.path().string() + ": record has no scores");
        }
        s.seat0_utility = Utility(game_ptr->metadata(), s.record.scores[0]);
        sims.push_back(std::move(s));
      }
    }
  }
  // Same order as an experiment: random before mcts, then other names.
  const auto rank = [](const std::string& c) {
    return c == kRandomCondition ? 0 : c == kMctsCondition ? 1 : 2;
  };
  std::sort(sims.begin(), sims.end(),
            [&](const SimResult& a, const SimResult& b) {
              return std::make_tuple(a.game, rank(a.condition), a.condition,
                                     a.sim) <
                     std::make_tuple(b.game, rank(b.condition), b.condition,
                                     b.sim);
            });
  return sims;
}

ExperimentResult RunExperiment(const ExperimentPlan& plan,
                               ExperimentResult* result) {
  if (plan.n_per_condition < 0) {
    throw ConfigError("n_per_condition must be non-negative");
  }
  struct Task {
    std::string game;
    std::string condition;
    int sim;
  };
  std::vector<Task> tasks;
  for (const std::string& name : plan.games) {
    const std::string id = LookupGame(name)->metadata().id;
    for (const std::string& cond : plan.conditions) {
      if (cond != kRandomCondition && cond != kMctsCondition) {
        throw ConfigError("unknown condition '" + cond +
                          "'; expected random or mcts");
      }
      for (int i = 0; i < plan.n_per_condition; ++i) {
        tasks.push_back({id, cond, i});
      }
    }
  }
  std::vector<SimResult> sims(tasks.size());
  std::mutex progress_mu;
  int done = 0;
  ParallelFor(static_cast<int>(tasks.size()), plan.jobs, [&](int i) {
    const Task& t = tasks[i];
    sims[i] = RunSim(t.game, t.condition, t.sim,
                     SimSeed(plan.master_seed, t.game, t.condition, t.sim),
                     plan.mcts);
    if (plan.progress) {
      std::lock_guard<std::mutex> lock(progress_mu);
      plan.progress(++done, static_cast<int>(tasks.size()));
    }
  });
  ExperimentResult out = Analyze(std::move(sims));
  if (!plan.out_dir.empty()) WriteOutputs(out, plan.out_dir);
  if (out.failures() > 0) {
    std::string msg = std::to_string(out.failures()) + " simulation(s) failed:";
    for (const SimResult& s : out.sims) {
      if (s.ok) continue;
      msg += "\n  (" + s.game + ", " + s.condition + ", seed " +
             std::to_string(s.seed) + "): " + s.error;
    }
    if (result != nullptr) *result = out;
    throw Error(msg);
  }
  if (result != nullptr) *result = out;
  return out;
}

std::vector<GameRecord> Simulate(std::string_view game,
                                 const std::vector<AgentSpec>& agents,
                                 int count, std::uint64_t seed, int jobs) {
  std::shared_ptr<const Game> def = LookupGame(game);
  if (static_cast<int>(agents.size()) != def->num_players()) {
    throw ArgumentError(def->metadata().id + " needs " +
                        std::to_string(def->num_players()) + " agents, got " +
                        std::to_string(agents.size()));
  }
  std::vector<GameRecord> records(std::max(count, 0));
  ParallelFor(count, jobs, [&](int i) {
    const std::uint64_t sim_seed = DeriveSeed(seed, "sim", i);
    std::vector<std::unique_ptr<Agent>> owned;
    std::vector<Agent*> seats;
    for (std::size_t p = 0; p < agents.size(); ++p) {
      owned.push_back(MakeAgent(agents[p], DeriveSeed(sim_seed, "agent", p)));
      seats.push_back(owned.back().get());
    }
    records[i] = Run(def, sim_seed, seats);
  });
  return records;
}

}  // namespace valet
