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
#include "nlohmann/json.hpp"
#include "support.h"
#include "valet/errors.h"
#include "valet/infoflow.h"
#include "valet/registry.h"

namespace valet {
namespace {

LocationInfo Loc(int owner, Visibility v,
                 LocationClass k = LocationClass::kPlay) {
  return LocationInfo{"x", owner, k, v};
}

TEST(ClassifyMoveTest, MovementTable) {
  const auto pub = Loc(kTableOwner, Visibility::kPublic);
  const auto hidden = Loc(kTableOwner, Visibility::kHidden);
  const auto mine = Loc(0, Visibility::kPrivate);
  const auto yours = Loc(1, Visibility::kPrivate);
  const auto memory =
      Loc(kTableOwner, Visibility::kPublic, LocationClass::kMemory);
  EXPECT_EQ(ClassifyMove(pub, mine), EdgeKind::kTaken);
  EXPECT_EQ(ClassifyMove(pub, hidden), EdgeKind::kTaken);
  EXPECT_EQ(ClassifyMove(mine, yours), EdgeKind::kShared);
  EXPECT_EQ(ClassifyMove(mine, hidden), EdgeKind::kShared);
  EXPECT_EQ(ClassifyMove(mine, Loc(0, Visibility::kHidden)), EdgeKind::kNormal);
  EXPECT_EQ(ClassifyMove(mine, pub), EdgeKind::kNormal);
  EXPECT_EQ(ClassifyMove(hidden, mine), EdgeKind::kNormal);
  EXPECT_EQ(ClassifyMove(pub, memory), EdgeKind::kNormal);
  EXPECT_EQ(ClassifyMove(pub, pub), EdgeKind::kNormal);
}

std::vector<GameRecord> Records(const std::string& game, int n) {
  std::vector<GameRecord> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(testing::PlayRandomChecked(game, 300 + i));
  }
  return out;
}

TEST(InfoflowTest, CribbageSharesThroughTheCrib) {
  const auto game = LookupGame("cribbage");
  const FlowGraph graph = BuildGraph(*game, Records("cribbage", 20));
  bool shared_to_crib = false;
  for (const FlowEdge& e : graph.edges) {
    if (e.kind == EdgeKind::kShared && graph.nodes[e.to].name == "crib") {
      shared_to_crib = true;
    }
  }
  EXPECT_TRUE(shared_to_crib);
  const std::string dot = ToDot(graph);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find(std::string(kSharedColor)), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(InfoflowTest, GoofspielDrawsDistinctBacksBold) {
  const auto game = LookupGame("goofspiel");
  const FlowGraph graph = BuildGraph(*game, Records("goofspiel", 5));
  EXPECT_TRUE(Classify(graph, game->metadata()).Has(InfoLabels::kBacks));
  EXPECT_NE(ToDot(graph).find("penwidth=3"), std::string::npos);
}

TEST(InfoflowTest, RummyTakesFromTheDiscard) {
  const auto game = LookupGame("rummy");
  const FlowGraph graph = BuildGraph(*game, Records("rummy", 10));
  const InfoLabels labels = Classify(graph, game->metadata());
  EXPECT_TRUE(labels.Has(InfoLabels::kTaken));
  EXPECT_FALSE(labels.Has(InfoLabels::kShared));
  EXPECT_NE(ToDot(graph).find("style=dotted"), std::string::npos);
}

TEST(InfoflowTest, BlackjackHasNoLabels) {
  const auto game = LookupGame("blackjack");
  EXPECT_TRUE(
      Classify(BuildGraph(*game, Records("blackjack", 30)), game->metadata())
          .empty());
}

TEST(InfoflowTest, JsonListsNodesAndEdges) {
  const auto game = LookupGame("hearts");
  const FlowGraph graph = BuildGraph(*game, Records("hearts", 2));
  const auto json = nlohmann::json::parse(ToJson(graph));
  EXPECT_EQ(json["nodes"].size(), graph.nodes.size());
  EXPECT_EQ(json["edges"].size(), graph.edges.size());
  for (const auto& e : json["edges"]) {
    EXPECT_TRUE(e.contains("from_loc"));
    EXPECT_TRUE(e.contains("kind"));
    EXPECT_GT(e["count"].get<int>(), 0);
  }
}

TEST(InfoflowTest, MixedGamesAreRejected) {
  std::vector<GameRecord> mixed = Records("hearts", 1);
  mixed.push_back(testing::PlayRandomChecked("whist", 1));
  EXPECT_THROW(BuildGraph(mixed), ArgumentError);
}

TEST(InfoLabelsTest, ParseAndPrint) {
  EXPECT_EQ(InfoLabels::Parse("P, T, S, D, B").ToString(), "P, T, S, D, B");
  EXPECT_EQ(InfoLabels::Parse("dp").ToString(), "P, D");
  EXPECT_TRUE(InfoLabels::Parse("").empty());
  EXPECT_THROW(InfoLabels::Parse("X"), ParseError);
}

}  // namespace
}  // namespace valet
