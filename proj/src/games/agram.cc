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

// Agram: last-trick game from Niger. Three seats, six cards each, no trumps;
// whoever wins the sixth trick wins the game.
#include "games/common.h"

namespace valet::games {
namespace {

class Agram : public TrickGame {
 public:
  Agram()
      : TrickGame(GameMetadata{.id = "agram",
                               .name = "Agram",
                               .genre = "Last Trick",
                               .origin = "Niger",
                               .year = 2000,
                               .players = 3,
                               .deck_family = "Unique",
                               .deck = DeckSpec::kAgram35,
                               .scoring = Objective::kOneWinner,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .score_min = 0,
                               .score_max = 1},
                  /*hand_size=*/6) {}

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    StartPlay(state, 0);
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    if (SuitIndex(c.suit) != led_suit) return -1;
    return c.rank == kAce ? 14 : c.rank;
  }

  void FinishHand(GameState& state) const override {
    state.SetScore(state.Var(v_leader_), 1);
    state.SetTerminal();
  }
};

}  // namespace

std::shared_ptr<const Game> MakeAgram() { return std::make_shared<Agram>(); }

}  // namespace valet::games
