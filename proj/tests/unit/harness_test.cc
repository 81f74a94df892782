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

#include <atomic>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "valet/errors.h"
#include "valet/harness.h"

namespace valet {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("valet_harness_" + name + "_" +
                        std::to_string(::testing::UnitTest::GetInstance()
                                           ->random_seed()));
  fs::remove_all(dir);
  return dir;
}

ExperimentPlan SmallPlan() {
  ExperimentPlan plan;
  plan.games = {"hearts", "leduc"};
  plan.n_per_condition = 2;
  plan.master_seed = 7;
  plan.mcts.determinizations = 2;
  plan.mcts.budget_multiplier = 3;
  plan.jobs = 1;
  return plan;
}

TEST(SimSeedTest, DependsOnEveryPart) {
  const auto s = SimSeed(1, "hearts", "random", 0);
  EXPECT_EQ(s, SimSeed(1, "hearts", "random", 0));
  EXPECT_NE(s, SimSeed(2, "hearts", "random", 0));
  EXPECT_NE(s, SimSeed(1, "whist", "random", 0));
  EXPECT_NE(s, SimSeed(1, "hearts", "mcts", 0));
  EXPECT_NE(s, SimSeed(1, "hearts", "random", 1));
}

TEST(ExperimentTest, CountsAndLayout) {
  ExperimentPlan plan = SmallPlan();
  plan.out_dir = TempDir("layout");
  const ExperimentResult result = RunExperiment(plan);
  EXPECT_EQ(result.sims.size(), 8u);
  EXPECT_EQ(result.failures(), 0);
  EXPECT_EQ(result.lengths.size(), 8u);
  EXPECT_EQ(result.scores.size(), 8u);
  for (const char* game : {"hearts", "leduc"}) {
    for (const char* cond : {"random", "mcts"}) {
      for (int i = 0; i < 2; ++i) {
        EXPECT_TRUE(fs::exists(SimPath(plan.out_dir, game, cond, i)));
      }
    }
  }
  for (const char* f : {"metrics/branching.csv", "metrics/lengths.csv",
                        "metrics/scores.csv", "summary.json"}) {
    EXPECT_TRUE(fs::exists(plan.out_dir / f)) << f;
  }
  const auto summary =
      nlohmann::json::parse(ReadTextFile(plan.out_dir / "summary.json"));
  EXPECT_EQ(summary["games"]["hearts"]["mcts"]["completed"], 2);
  EXPECT_TRUE(summary["games"]["leduc"]["random"]["complete"].get<bool>());
  fs::remove_all(plan.out_dir);
}

TEST(ExperimentTest, JobCountDoesNotChangeResults) {
  ExperimentPlan plan = SmallPlan();
  const ExperimentResult one = RunExperiment(plan);
  plan.jobs = 4;
  const ExperimentResult four = RunExperiment(plan);
  EXPECT_EQ(one.summary_json, four.summary_json);
  EXPECT_EQ(BranchingCsv(one.branching), BranchingCsv(four.branching));
  for (std::size_t i = 0; i < one.sims.size(); ++i) {
    EXPECT_EQ(one.sims[i].record, four.sims[i].record);
  }
}

TEST(ExperimentTest, RandomConditionIgnoresTheMctsCondition) {
  ExperimentPlan plan = SmallPlan();
  const ExperimentResult both = RunExperiment(plan);
  plan.conditions = {"random"};
  const ExperimentResult random_only = RunExperiment(plan);
  ASSERT_EQ(random_only.sims.size(), 4u);
  for (const SimResult& s : random_only.sims) {
    bool matched = false;
    for (const SimResult& t : both.sims) {
      if (t.game == s.game && t.condition == s.condition && t.sim == s.sim) {
        EXPECT_EQ(t.record, s.record);
        matched = true;
      }
    }
    EXPECT_TRUE(matched);
  }
}

TEST(ExperimentTest, MctsSeatIsCounted) {
  const SimResult r = RunSim("leduc", "mcts", 0, 3, MctsConfig{2, 3});
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_EQ(r.mcts_stats.decisions, [&] {
    int n = 0;
    for (const Event& e : r.record.events) {
      if (const auto* d = std::get_if<DecisionEvent>(&e)) n += d->seat == 0;
    }
    return n;
  }());
}

TEST(ExperimentTest, BadPlansAreRejected) {
  ExperimentPlan plan = SmallPlan();
  plan.conditions = {"greedy"};
  EXPECT_THROW(RunExperiment(plan), ConfigError);
  plan = SmallPlan();
  plan.games = {"bridge"};
  EXPECT_THROW(RunExperiment(plan), ConfigError);
  const SimResult r = RunSim("hearts", "greedy", 0, 1, {});
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.error.empty());
}

TEST(AnalyzeTest, ReloadedRecordsGiveTheSameMetrics) {
  ExperimentPlan plan = SmallPlan();
  plan.out_dir = TempDir("reload");
  const ExperimentResult result = RunExperiment(plan);
  const ExperimentResult again = Analyze(LoadSims(plan.out_dir));
  EXPECT_EQ(again.summary_json, result.summary_json);
  EXPECT_EQ(ScoresCsv(again.scores), ScoresCsv(result.scores));
  fs::remove_all(plan.out_dir);
}

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(100);
  ParallelFor(100, 4, [&](int i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(SimulateTest, OneRecordPerSim) {
  std::vector<AgentSpec> agents(4);
  const auto records = Simulate("hearts", agents, 3, 11);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_NE(records[0].seed, records[1].seed);
  EXPECT_THROW(Simulate("hearts", std::vector<AgentSpec>(3), 1, 1),
               ArgumentError);
}

}  // namespace
}  // namespace valet
