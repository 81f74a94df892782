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

// Hearts without passing: one point per heart taken, thirteen for the queen
// of spades; taking all 26 scores zero and gives everyone else 26.
//
// Hearts may be led at any time and seat 0 leads the first trick, so the
// leader always chooses from the whole hand.
#include "games/common.h"

namespace valet::games {
namespace {

class Hearts : public TrickGame {
 public:
  Hearts()
      : TrickGame(GameMetadata{.id = "hearts",
                               .name = "Hearts",
                               .genre = "Avoidance",
                               .origin = "USA",
                               .year = 1880,
                               .players = 4,
                               .deck_family = "French",
                               .deck = DeckSpec::kFrench52,
                               .scoring = Objective::kLowScore,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .score_min = 0,
                               .score_max = 26},
                  /*hand_size=*/13) {}

  static int Penalty(const Card& c) {
    if (c.suit == Suit::kHearts) return 1;
    if (c.suit == Suit::kSpades && c.rank == kQueen) return 13;
    return 0;
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    StartPlay(state, 0);
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    if (SuitIndex(c.suit) != led_suit) return -1;
    return AceHighOrdinal(c.rank);
  }

  void FinishHand(GameState& state) const override {
    int points[4] = {0, 0, 0, 0};
    for (int p = 0; p < 4; ++p) {
      for (CardId c : state.Cards(won_[p])) points[p] += Penalty(state.card(c));
    }
    for (int p = 0; p < 4; ++p) {
      if (points[p] == 26) {
        for (int q = 0; q < 4; ++q) points[q] = (q == p) ? 0 : 26;
        break;
      }
    }
    for (int p = 0; p < 4; ++p) state.SetScore(p, points[p]);
    state.SetTerminal();
  }
};

}  // namespace

std::shared_ptr<const Game> MakeHearts() { return std::make_shared<Hearts>(); }

}  // namespace valet::games
