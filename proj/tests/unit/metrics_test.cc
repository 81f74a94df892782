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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support.h"
#include "valet/errors.h"
#include "valet/metrics.h"

namespace valet {
namespace {

TEST(QuantileTest, InterpolatesBetweenClosestRanks) {
  const std::vector<double> v = {7, 1, 3, 5};  // sorted: 1 3 5 7
  EXPECT_DOUBLE_EQ(Quantile(v, 0.0), 1);
  EXPECT_DOUBLE_EQ(Quantile(v, 0.25), 2.5);
  EXPECT_DOUBLE_EQ(Quantile(v, 0.5), 4);
  EXPECT_DOUBLE_EQ(Quantile(v, 0.75), 5.5);
  EXPECT_DOUBLE_EQ(Quantile(v, 1.0), 7);
}

TEST(SummaryTest, FiveNumbersAndMean) {
  const std::vector<double> v = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  const Summary s = Summarize(v);
  EXPECT_EQ(s.count, 9);
  EXPECT_DOUBLE_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.q1, 3);
  EXPECT_DOUBLE_EQ(s.median, 5);
  EXPECT_DOUBLE_EQ(s.q3, 7);
  EXPECT_DOUBLE_EQ(s.max, 9);
  EXPECT_DOUBLE_EQ(s.mean, 5);
  EXPECT_THROW(Summarize(std::vector<double>{}), ArgumentError);
}

TEST(SummaryTest, SingleValue) {
  const Summary s = Summarize(std::vector<double>{4});
  EXPECT_DOUBLE_EQ(s.q1, 4);
  EXPECT_DOUBLE_EQ(s.q3, 4);
}

class ExtractTest : public ::testing::Test {
 protected:
  void SetUp() override {
    records_.push_back(testing::PlayRandomChecked("whist", 1));
    records_.push_back(testing::PlayRandomChecked("whist", 2));
    labeled_ = {{"random", 0, &records_[0]}, {"mcts", 1, &records_[1]}};
  }
  std::vector<GameRecord> records_;
  std::vector<LabeledRecord> labeled_;
};

TEST_F(ExtractTest, OneBranchingSamplePerDecision) {
  const auto samples = ExtractBranching(labeled_);
  ASSERT_EQ(samples.size(), 104u);
  // The opening lead chooses among all 13 cards.
  EXPECT_EQ(samples[0].num_choices, 13);
  EXPECT_EQ(samples[0].decision_index, 0);
  EXPECT_EQ(samples[52].condition, "mcts");
  EXPECT_EQ(samples[52].sim, 1);
}

TEST_F(ExtractTest, LengthsAndScores) {
  const auto lengths = ExtractLengths(labeled_);
  ASSERT_EQ(lengths.size(), 2u);
  EXPECT_EQ(lengths[0].length, 52);
  const auto scores = ExtractScores(labeled_);
  ASSERT_EQ(scores.size(), 2u);
  EXPECT_EQ(scores[1].score, records_[1].scores[0]);
  EXPECT_EQ(scores[1].seat, 0);
}

TEST_F(ExtractTest, CsvHeadersAndRows) {
  const std::string branching = BranchingCsv(ExtractBranching(labeled_));
  EXPECT_EQ(branching.rfind("game,condition,sim,decision_index,seat,"
                            "num_choices\n",
                            0),
            0u);
  EXPECT_EQ(std::count(branching.begin(), branching.end(), '\n'), 105);
  EXPECT_EQ(LengthsCsv(ExtractLengths(labeled_)),
            "game,condition,sim,length\nwhist,random,0,52\nwhist,mcts,1,52\n");
  const std::string scores = ScoresCsv(ExtractScores(labeled_));
  EXPECT_EQ(scores.rfind("game,condition,sim,seat,score\nwhist,random,0,0,",
                         0),
            0u);
}

}  // namespace
}  // namespace valet
