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

#include <algorithm>
#include <map>
#include <string>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "support.h"
#include "valet/errors.h"
#include "valet/harness.h"
#include "valet/registry.h"

namespace valet {
namespace {

using testing::ReferenceTable;

TEST(RegistryTest, MatchesTheReferenceTable) {
  ASSERT_EQ(GameIds().size(), ReferenceTable().size());
  for (const auto& row : ReferenceTable()) {
    const GameMetadata& m = LookupGame(row.id)->metadata();
    EXPECT_EQ(m.players, row.players) << row.id;
    EXPECT_EQ(m.tricks, row.tricks) << row.id;
    EXPECT_EQ(m.sets, row.sets) << row.id;
    EXPECT_EQ(m.teams, row.teams) << row.id;
    EXPECT_EQ(m.info, InfoLabels::Parse(row.info)) << row.id;
    EXPECT_LE(m.score_min, m.score_max) << row.id;
    if (m.teams) {
      EXPECT_EQ(static_cast<int>(m.team_of_seat.size()), m.players);
    }
  }
}

TEST(RegistryTest, ObjectivesFollowTheTable) {
  const std::map<std::string, Objective> objectives = {
      {"agram", Objective::kOneWinner}, {"cuckoo", Objective::kOneLoser},
      {"skitgubbe", Objective::kOneLoser}, {"hearts", Objective::kLowScore},
      {"golf6", Objective::kLowScore}, {"rummy", Objective::kLowScore},
      {"crazy_eights", Objective::kLowScore},
      {"whist", Objective::kHighScore}};
  for (const auto& [id, objective] : objectives) {
    EXPECT_EQ(LookupGame(id)->metadata().scoring, objective) << id;
  }
}

TEST(RegistryTest, LookupIgnoresCaseAndPunctuation) {
  EXPECT_EQ(LookupGame("Go Fish")->metadata().id, "go_fish");
  EXPECT_EQ(LookupGame("GO-FISH")->metadata().id, "go_fish");
  EXPECT_EQ(LookupGame("Leduc Hold'em")->metadata().id, "leduc");
  EXPECT_THROW(LookupGame("canasta"), ConfigError);
}

TEST(RegistryTest, MetadataJsonHasOneEntryPerGame) {
  const auto json = nlohmann::json::parse(MetadataJson());
  ASSERT_EQ(json.size(), 21u);
  for (const auto& entry : json) {
    EXPECT_TRUE(entry.contains("id"));
    EXPECT_TRUE(entry.contains("info_labels"));
    if (entry["id"] == "golf6" || entry["id"] == "scarto") {
      EXPECT_TRUE(entry["year"].is_null()) << entry["id"];
    }
  }
}

// Opening hand sizes from the dealing rules of each game.
TEST(DealTest, OpeningHandSizes) {
  const std::map<std::string, int> sizes = {
      {"agram", 6},  {"crazy_eights", 5}, {"cribbage", 6}, {"cuckoo", 1},
      {"euchre", 5}, {"go_fish", 5},      {"goofspiel", 13}, {"hearts", 13},
      {"klaverjassen", 8}, {"leduc", 1},  {"pitch", 6},     {"rummy", 10},
      {"scarto", 25}, {"schwimmen", 3},   {"scopa", 3},     {"skitgubbe", 3},
      {"sueca", 10}, {"whist", 13}};
  for (const auto& [id, size] : sizes) {
    const auto game = LookupGame(id);
    const GameState state = game->NewInitialState(17);
    for (int p = 0; p < game->num_players(); ++p) {
      const int hand =
          testing::LocationByName(*game, "hand" + std::to_string(p));
      EXPECT_EQ(state.Size(hand), size) << id << " seat " << p;
    }
  }
  const auto president = LookupGame("president");
  const GameState state = president->NewInitialState(17);
  int total = 0;
  for (int p = 0; p < 5; ++p) {
    const int n = state.Size(
        testing::LocationByName(*president, "hand" + std::to_string(p)));
    EXPECT_TRUE(n == 10 || n == 11);
    total += n;
  }
  EXPECT_EQ(total, 52);
}

TEST(DealTest, BlackjackDealsTwoAndTwo) {
  const auto game = LookupGame("blackjack");
  const GameState state = game->NewInitialState(2);
  EXPECT_EQ(state.Size(testing::LocationByName(*game, "hand")), 2);
  EXPECT_EQ(state.Size(testing::LocationByName(*game, "dealer_up")) +
                state.Size(testing::LocationByName(*game, "dealer_hole")),
            2);
}

class ScoringTest : public ::testing::TestWithParam<std::string> {};

// Scores stay in bounds, partners agree, and the one-winner and one-loser
// encodings hold in every random playthrough.
TEST_P(ScoringTest, ScoresRespectTheObjective) {
  const GameMetadata& m = LookupGame(GetParam())->metadata();
  for (int i = 0; i < 40; ++i) {
    const GameRecord r =
        testing::PlayRandomChecked(GetParam(), SimSeed(5, GetParam(), "t", i));
    ASSERT_EQ(static_cast<int>(r.scores.size()), m.players);
    for (int s : r.scores) {
      EXPECT_GE(s, m.score_min);
      EXPECT_LE(s, m.score_max);
    }
    if (m.teams) {
      for (int a = 0; a < m.players; ++a) {
        for (int b = 0; b < m.players; ++b) {
          if (m.team_of_seat[a] == m.team_of_seat[b]) {
            EXPECT_EQ(r.scores[a], r.scores[b]);
          }
        }
      }
    }
    const int ones = static_cast<int>(std::count(r.scores.begin(),
                                                 r.scores.end(), 1));
    if (m.scoring == Objective::kOneWinner) EXPECT_EQ(ones, 1);
    if (m.scoring == Objective::kOneLoser) EXPECT_EQ(ones, m.players - 1);
  }
}

INSTANTIATE_TEST_SUITE_P(AllGames, ScoringTest, ::testing::ValuesIn(GameIds()),
                         [](const auto& info) { return info.param; });

TEST(FixedLengthTest, TrickGamesPlayEveryCard) {
  const std::map<std::string, int> lengths = {
      {"hearts", 52}, {"whist", 52}, {"sueca", 40}, {"agram", 18}};
  for (const auto& [id, len] : lengths) {
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(testing::PlayRandomChecked(id, 1000 + i).NumDecisions(), len)
          << id;
    }
  }
}

}  // namespace
}  // namespace valet
