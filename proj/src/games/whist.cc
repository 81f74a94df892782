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

// Whist: four seats in fixed partnerships, trump turned from the dealer's
// last card, one point per trick over six.
#include "games/common.h"

namespace valet::games {
namespace {

class Whist : public TrickGame {
 public:
  Whist()
      : TrickGame(GameMetadata{.id = "whist",
                               .name = "Whist",
                               .genre = "Trick Taking",
                               .origin = "England",
                               .year = 1880,
                               .players = 4,
                               .deck_family = "French",
                               .deck = DeckSpec::kFrench52,
                               .scoring = Objective::kHighScore,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .teams = true,
                               .score_min = 0,
                               .score_max = 7,
                               .team_of_seat = {0, 1, 0, 1}},
                  /*hand_size=*/13) {
    v_team_tricks_[0] = AddVar("team0_tricks");
    v_team_tricks_[1] = AddVar("team1_tricks");
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    // The dealer (seat 3) receives the last card; its suit is trump.
    state.SetVar(v_trump_, SuitIndex(state.card(state.Top(hand_[3])).suit));
    StartPlay(state, 0);
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    const int suit = SuitIndex(c.suit);
    if (suit == state.Var(v_trump_)) return 100 + AceHighOrdinal(c.rank);
    if (suit == led_suit) return AceHighOrdinal(c.rank);
    return -1;
  }

  void OnTrickWon(GameState& state, int winner, int) const override {
    const int v = v_team_tricks_[TeamOf(winner)];
    state.SetVar(v, state.Var(v) + 1);
  }

  void FinishHand(GameState& state) const override {
    for (int team = 0; team < 2; ++team) {
      const int tricks = state.Var(v_team_tricks_[team]);
      SetTeamScore(state, team, tricks > 6 ? tricks - 6 : 0);
    }
    state.SetTerminal();
  }

 private:
  int v_team_tricks_[2];
};

}  // namespace

std::shared_ptr<const Game> MakeWhist() { return std::make_shared<Whist>(); }

}  // namespace valet::games
