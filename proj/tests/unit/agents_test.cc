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

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support.h"
#include "valet/agents.h"
#include "valet/errors.h"
#include "valet/observation.h"
#include "valet/registry.h"

namespace valet {
namespace {

GameMetadata ToyMetadata(int players) {
  return GameMetadata{.id = "toy",
                      .name = "Toy",
                      .players = players,
                      .deck = DeckSpec::kLeduc6,
                      .scoring = Objective::kHighScore,
                      .score_min = 0,
                      .score_max = 2};
}

// One decision: move kind 1 scores 2, kind 2 scores 0.
class OneShot : public Game {
 public:
  OneShot() : Game(ToyMetadata(1)) {
    AddLocation("stock", kTableOwner, Visibility::kHidden);
  }
  void LegalMoves(const GameState& state, std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    out.push_back(Move{2});
    out.push_back(Move{1});
  }
  void ApplyMove(GameState& state, const Move& move) const override {
    state.SetScore(0, move.kind == 1 ? 2 : 0);
    state.SetTerminal();
  }
  std::string MoveText(const Move& m) const override {
    return std::to_string(m.kind);
  }

 protected:
  void Setup(GameState& state) const override { state.SetToMove(0); }
};

// Seat 0 picks safe (kind 1, scores 1 each) or risky (kind 2). After risky,
// seat 1 picks who gets 2 points. Random rollouts rate risky at 1 for seat 0;
// a seat 1 that maximizes its own utility makes it 0.
class Duel : public Game {
 public:
  Duel() : Game(ToyMetadata(2)) {
    AddLocation("stock", kTableOwner, Visibility::kHidden);
    v_risky_ = AddVar("risky");
  }
  void LegalMoves(const GameState& state, std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    out.push_back(Move{1});
    out.push_back(Move{2});
  }
  void ApplyMove(GameState& state, const Move& move) const override {
    if (state.ToMove() == 0) {
      if (move.kind == 1) {
        state.SetScore(0, 1);
        state.SetScore(1, 1);
        state.SetTerminal();
      } else {
        state.SetVar(v_risky_, 1);
        state.SetToMove(1);
      }
      return;
    }
    state.SetScore(move.kind == 1 ? 0 : 1, 2);
    state.SetTerminal();
  }
  std::string MoveText(const Move& m) const override {
    return std::to_string(m.kind);
  }

 protected:
  void Setup(GameState& state) const override { state.SetToMove(0); }

 private:
  int v_risky_;
};

TEST(UtilityTest, MapsScoresByObjective) {
  GameMetadata m = ToyMetadata(1);
  m.score_min = -10;
  m.score_max = 10;
  EXPECT_DOUBLE_EQ(Utility(m, 10), 1.0);
  EXPECT_DOUBLE_EQ(Utility(m, 0), 0.5);
  m.scoring = Objective::kLowScore;
  EXPECT_DOUBLE_EQ(Utility(m, -10), 1.0);
  EXPECT_DOUBLE_EQ(Utility(m, 10), 0.0);
  m.scoring = Objective::kOneLoser;
  EXPECT_DOUBLE_EQ(Utility(m, 0), 0.0);
  EXPECT_DOUBLE_EQ(Utility(m, 1), 1.0);
}

TEST(UctTest, PrefersTheWinningMove) {
  OneShot game;
  const GameState root = game.NewInitialState(0);
  Rng rng(1);
  MctsStats stats;
  const std::vector<int> visits = UctSearch(root, 200, MctsConfig{}, rng, &stats);
  ASSERT_EQ(visits.size(), 2u);
  // Canonical order: kind 1 first.
  EXPECT_GT(visits[0], visits[1]);
  EXPECT_EQ(visits[0] + visits[1], 200);
  EXPECT_EQ(stats.iterations, 200);
  EXPECT_EQ(stats.rollouts, 200);
}

TEST(UctTest, EachSeatMaximizesItsOwnUtility) {
  Duel game;
  const GameState root = game.NewInitialState(0);
  Rng rng(2);
  const std::vector<int> visits = UctSearch(root, 2000, MctsConfig{}, rng);
  EXPECT_GT(visits[0], visits[1]);
}

TEST(UctTest, ExpandsChildrenInCanonicalOrderFirst) {
  OneShot game;
  Rng rng(3);
  const std::vector<int> visits =
      UctSearch(game.NewInitialState(0), 2, MctsConfig{}, rng);
  EXPECT_EQ(visits, (std::vector<int>{1, 1}));
}

TEST(MctsTest, BudgetIsDeterminizationsTimesMultiplierTimesLegal) {
  const auto game = LookupGame("hearts");
  const GameState state = game->NewInitialState(4);
  const std::vector<Move> legal = CanonicalLegalMoves(state);
  MctsConfig config;
  config.determinizations = 3;
  config.budget_multiplier = 7;
  MctsStats stats;
  MctsChoose(*game, Observe(state, state.ToMove()), legal, config, 1, &stats);
  EXPECT_EQ(stats.decisions, 1);
  EXPECT_EQ(stats.searches, 1);
  EXPECT_EQ(stats.determinizations, 3);
  EXPECT_EQ(stats.rollouts,
            3 * 7 * static_cast<std::int64_t>(legal.size()));
}

TEST(MctsTest, SingleMoveNeedsNoSearch) {
  OneShot game;
  const GameState state = game.NewInitialState(0);
  const std::vector<Move> legal = {Move{1}};
  MctsStats stats;
  EXPECT_EQ(MctsChoose(game, Observe(state, 0), legal, {}, 1, &stats), Move{1});
  EXPECT_EQ(stats.rollouts, 0);
  EXPECT_EQ(stats.searches, 0);
}

TEST(MctsTest, SameSeedSameChoice) {
  const auto game = LookupGame("scopa");
  const GameState state = game->NewInitialState(6);
  const auto legal = CanonicalLegalMoves(state);
  const Observation obs = Observe(state, state.ToMove());
  MctsConfig config{.determinizations = 2, .budget_multiplier = 10};
  EXPECT_EQ(MctsChoose(*game, obs, legal, config, 5),
            MctsChoose(*game, obs, legal, config, 5));
}

// Exact expectation over the unseen cards: the dealer's hole card and draws
// come from the shoe uniformly without replacement; the dealer stands on 17.
// `counts[v]` is the number of unseen cards worth v points (ace = 1).
double DealerOutcome(std::vector<int>& counts, int left, int total,
                     bool has_ace, int player) {
  const int best = total + (has_ace && total + 10 <= 21 ? 10 : 0);
  if (best >= 17) {
    if (best > 21 || player > best) return 2;
    return player < best ? -2 : 0;
  }
  double sum = 0;
  for (int v = 1; v <= 10; ++v) {
    if (counts[v] == 0) continue;
    const double p = counts[v] / static_cast<double>(left);
    --counts[v];
    sum += p * DealerOutcome(counts, left - 1, total + v, has_ace || v == 1,
                             player);
    ++counts[v];
  }
  return sum;
}

TEST(MctsTest, BlackjackStandsOnTwentyAgainstSix) {
  const auto game = LookupGame("blackjack");
  const int shoe = testing::LocationByName(*game, "shoe");
  const int hand = testing::LocationByName(*game, "hand");
  const int up = testing::LocationByName(*game, "dealer_up");
  const int hole = testing::LocationByName(*game, "dealer_hole");
  // Find the ids of KH, QS and 6C; everything else goes to the shoe with 5D
  // as the hole card.
  std::map<std::string, CardId> id;
  for (const Card& c : game->deck()) id[CardText(c)] = c.id;
  GameState state = game->NewInitialState(0);
  std::vector<CardId> rest;
  for (const Card& c : game->deck()) {
    const std::string t = CardText(c);
    if (t != "KH" && t != "QS" && t != "6C" && t != "5D") rest.push_back(c.id);
  }
  state.SetCards(shoe, rest);
  state.SetCards(hand, std::vector<CardId>{id["KH"], id["QS"]});
  state.SetCards(up, std::vector<CardId>{id["6C"]});
  state.SetCards(hole, std::vector<CardId>{id["5D"]});
  state.SetToMove(0);
  const auto legal = CanonicalLegalMoves(state);
  ASSERT_EQ(legal.size(), 2u);

  // Oracle over the 49 cards the player cannot see.
  std::vector<int> counts(11, 0);
  int left = 0;
  for (const Card& c : game->deck()) {
    const std::string t = CardText(c);
    if (t == "KH" || t == "QS" || t == "6C") continue;
    ++counts[c.rank >= kJack ? 10 : c.rank];
    ++left;
  }
  const double stand = DealerOutcome(counts, left, 6, false, 20);
  // Hitting 20 survives only with an ace, after which standing on 21 is best.
  const double p_ace = counts[1] / static_cast<double>(left);
  --counts[1];
  const double hit =
      p_ace * DealerOutcome(counts, left - 1, 6, false, 21) + (1 - p_ace) * -2;
  ASSERT_GT(stand, hit);

  const Move chosen =
      MctsChoose(*game, Observe(state, 0), legal, MctsConfig{}, 3);
  EXPECT_EQ(game->MoveText(chosen), "stand");
}

TEST(RandomAgentTest, ChoosesUniformly) {
  std::vector<Move> legal = {Move{1}, Move{2}, Move{3}, Move{4}};
  Rng rng(8);
  std::map<int, int> counts;
  constexpr int kDraws = 40000;
  for (int i = 0; i < kDraws; ++i) ++counts[RandomChoose(legal, rng).kind];
  double chi = 0;
  for (const auto& [kind, n] : counts) {
    chi += (n - kDraws / 4.0) * (n - kDraws / 4.0) / (kDraws / 4.0);
  }
  // 99.9th percentile of chi-square with 3 degrees of freedom.
  EXPECT_LT(chi, 16.27);
  EXPECT_THROW(RandomChoose(std::vector<Move>{}, rng), ArgumentError);
}

TEST(AgentSpecTest, ParsesDefaultsAndOverrides) {
  EXPECT_EQ(ParseAgentSpec("random").kind, AgentSpec::Kind::kRandom);
  const AgentSpec plain = ParseAgentSpec("mcts");
  EXPECT_EQ(plain.kind, AgentSpec::Kind::kMcts);
  EXPECT_EQ(plain.mcts.determinizations, 10);
  EXPECT_EQ(plain.mcts.budget_multiplier, 100);
  EXPECT_NEAR(plain.mcts.exploration, std::sqrt(2.0), 1e-12);
  const AgentSpec custom = ParseAgentSpec("mcts(d=3,b=20,c=0.5)");
  EXPECT_EQ(custom.mcts.determinizations, 3);
  EXPECT_EQ(custom.mcts.budget_multiplier, 20);
  EXPECT_DOUBLE_EQ(custom.mcts.exploration, 0.5);
  EXPECT_EQ(ParseAgentSpec(custom.ToString()).mcts.budget_multiplier, 20);
  EXPECT_THROW(ParseAgentSpec("mcts(x=1)"), ConfigError);
  EXPECT_THROW(ParseAgentSpec("mcts(d=0)"), ConfigError);
  EXPECT_THROW(ParseAgentSpec("minimax"), ConfigError);
}

}  // namespace
}  // namespace valet
