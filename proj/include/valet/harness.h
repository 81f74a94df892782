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

#ifndef VALET_HARNESS_H_
#define VALET_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "valet/agents.h"
#include "valet/engine.h"
#include "valet/metrics.h"

namespace valet {

inline constexpr std::string_view kRandomCondition = "random";
inline constexpr std::string_view kMctsCondition = "mcts";

// Seed of sim `index` of a (game, condition) cell. Fixed forever:
// DeriveSeed(master, game + "/" + condition, index).
std::uint64_t SimSeed(std::uint64_t master_seed, std::string_view game,
                      std::string_view condition, int index);

struct ExperimentPlan {
  std::vector<std::string> games;
  int n_per_condition = 100;
  // "random": every seat random. "mcts": MCTS in seat 0, random elsewhere.
  std::vector<std::string> conditions = {"random", "mcts"};
  std::uint64_t master_seed = 0;
  MctsConfig mcts;
  int jobs = 0;  // 0 = hardware concurrency
  // When set, records, metrics CSVs and summary.json are written here.
  std::filesystem::path out_dir;
  // Called after every finished sim with (done, total); serialized.
  std::function<void(int, int)> progress;
};

struct SimResult {
  std::string game;
  std::string condition;
  int sim = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  GameRecord record;
  MctsStats mcts_stats;
  // Utility of seat 0 under the game's objective.
  double seat0_utility = 0.0;
};

struct ExperimentResult {
  std::vector<SimResult> sims;  // ordered by (game, condition, sim)
  std::vector<BranchingSample> branching;
  std::vector<LengthSample> lengths;
  std::vector<ScoreSample> scores;
  std::string summary_json;
  int failures() const;
};

// Runs one sim. Never throws for rule or agent failures; they land in
// SimResult::error.
SimResult RunSim(std::string_view game, std::string_view condition, int index,
                 std::uint64_t seed, const MctsConfig& mcts);

// Runs every sim of the plan on a work pool. Output is independent of the
// number of jobs. Writes files when out_dir is set. If any sim failed, the
// outputs of the successful ones are still written and an Error naming each
// failing (game, condition, seed) is thrown at the end; `result`, when
// non-null, receives the partial result first.
ExperimentResult RunExperiment(const ExperimentPlan& plan,
                               ExperimentResult* result = nullptr);

// Runs `count` playthroughs with one agent spec per seat. Sim i uses seed
// DeriveSeed(seed, "sim", i); agents get DeriveSeed(sim_seed, "agent", seat).
std::vector<GameRecord> Simulate(std::string_view game,
                                 const std::vector<AgentSpec>& agents,
                                 int count, std::uint64_t seed, int jobs = 1);

// Metrics and summary for already-collected records.
ExperimentResult Analyze(std::vector<SimResult> sims);

// Runs fn(i) for i in [0, count) on `jobs` threads (0 = hardware).
void ParallelFor(int count, int jobs, const std::function<void(int)>& fn);

// Where a sim's record lives: out/<game>/<condition>/sim<i>.jsonl.
std::filesystem::path SimPath(const std::filesystem::path& out_dir,
                              std::string_view game,
                              std::string_view condition, int index);
// Records of successful sims plus metrics/*.csv and summary.json.
void WriteOutputs(const ExperimentResult& result,
                  const std::filesystem::path& out_dir);
// Only metrics/*.csv and summary.json.
void WriteMetrics(const ExperimentResult& result,
                  const std::filesystem::path& out_dir);
// Reads every out/<game>/<condition>/sim<i>.jsonl below `out_dir`, sorted by
// game, then condition (random, mcts, others by name), then sim. Throws
// ParseError naming a malformed file.
std::vector<SimResult> LoadSims(const std::filesystem::path& out_dir);

void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace valet

#endif  // VALET_HARNESS_H_
