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

// Sueca: Portuguese ace-ten game for two partnerships with a 40-card deck.
// Trump is the suit of the dealer's last card; teams score card points
// (120 in the deck).
#include "games/common.h"

namespace valet::games {
namespace {

// Trick order A 7 K C J 6 5 4 3 2.
int SuecaOrder(int rank) {
  switch (rank) {
    case kAce: return 10;
    case 7: return 9;
    case kKing: return 8;
    case kCavalier: return 7;
    case kJack: return 6;
    default: return rank - 1;
  }
}

class Sueca : public TrickGame {
 public:
  Sueca()
      : TrickGame(GameMetadata{.id = "sueca",
                               .name = "Sueca",
                               .genre = "Ace-Ten",
                               .origin = "Portugal",
                               .year = 1800,
                               .players = 4,
                               .deck_family = "Spanish",
                               .deck = DeckSpec::kSpanish40,
                               .scoring = Objective::kHighScore,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .teams = true,
                               .score_min = 0,
                               .score_max = 120,
                               .team_of_seat = {0, 1, 0, 1}},
                  /*hand_size=*/10) {}

  static int CardPoints(int rank) {
    switch (rank) {
      case kAce: return 11;
      case 7: return 10;
      case kKing: return 4;
      case kCavalier: return 3;
      case kJack: return 2;
      default: return 0;
    }
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    state.SetVar(v_trump_, SuitIndex(state.card(state.Top(hand_[3])).suit));
    StartPlay(state, 0);
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    const int suit = SuitIndex(c.suit);
    if (suit == state.Var(v_trump_)) return 100 + SuecaOrder(c.rank);
    if (suit == led_suit) return SuecaOrder(c.rank);
    return -1;
  }

  void FinishHand(GameState& state) const override {
    int team_points[2] = {0, 0};
    for (int p = 0; p < 4; ++p) {
      for (CardId c : state.Cards(won_[p])) {
        team_points[TeamOf(p)] += CardPoints(state.card(c).rank);
      }
    }
    SetTeamScore(state, 0, team_points[0]);
    SetTeamScore(state, 1, team_points[1]);
    state.SetTerminal();
  }
};

}  // namespace

std::shared_ptr<const Game> MakeSueca() { return std::make_shared<Sueca>(); }

}  // namespace valet::games
