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

// Scarto, a three-player Tarot game. The three undealt cards form the
// dealer's scarto and count for the dealer; there is no exchange. Players
// follow suit, else must trump. The Fool may always be played, never wins
// and returns to its owner.
#include "games/common.h"

namespace valet::games {
namespace {

constexpr int kDealer = 2;
constexpr int kFoolStrength = -2;

bool IsFool(const Card& c) { return c.suit == Suit::kFool; }

// Counting value: honours and kings 5, queens 4, cavaliers 3, jacks 2,
// everything else 1.
int CountValue(const Card& c) {
  if (IsFool(c)) return 5;
  if (c.suit == Suit::kTrump) return (c.rank == 1 || c.rank == 21) ? 5 : 1;
  switch (c.rank) {
    case kKing: return 5;
    case kQueen: return 4;
    case kCavalier: return 3;
    case kJack: return 2;
    default: return 1;
  }
}

class Scarto : public TrickGame {
 public:
  Scarto()
      : TrickGame(GameMetadata{.id = "scarto",
                               .name = "Scarto",
                               .genre = "Tarot",
                               .origin = "Italy",
                               .year = std::nullopt,
                               .players = 3,
                               .deck_family = "Tarot",
                               .deck = DeckSpec::kTarot78,
                               .scoring = Objective::kHighScore,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .score_min = 0,
                               .score_max = 130},
                  /*hand_size=*/25) {
    scarto_ = AddLocation("scarto", kDealer, Visibility::kHidden);
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    state.MoveAll(stock_, scarto_);
    state.SetVar(v_trump_, SuitIndex(Suit::kTrump));
    StartPlay(state, 0);
  }

  int LedSuit(const GameState& state) const override {
    for (CardId c : state.Cards(trick_)) {
      if (!IsFool(state.card(c))) return SuitIndex(state.card(c).suit);
    }
    return -1;
  }

  void PlayMoves(const GameState& state, int seat,
                 std::vector<Move>& out) const override {
    const int led = LedSuit(state);
    const int trump = SuitIndex(Suit::kTrump);
    int required = -1;
    if (led >= 0) {
      if (HasSuit(state, seat, led)) {
        required = led;
      } else if (HasSuit(state, seat, trump)) {
        required = trump;
      }
    }
    for (CardId c : state.Cards(hand_[seat])) {
      const Card& card = state.card(c);
      if (required < 0 || IsFool(card) || SuitIndex(card.suit) == required) {
        out.push_back(Move{kPlayCard, c, 0, 0});
      }
    }
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    if (IsFool(c)) return kFoolStrength;
    if (c.suit == Suit::kTrump) return 100 + c.rank;
    if (SuitIndex(c.suit) == led_suit) return c.rank;
    return -1;
  }

  void CollectTrick(GameState& state, int winner) const override {
    auto cards = state.Cards(trick_);
    for (int i = 0; i < static_cast<int>(cards.size()); ++i) {
      if (IsFool(state.card(cards[i]))) {
        state.MoveCard(cards[i], trick_, won_[SeatOfTrickCard(state, i)]);
        break;
      }
    }
    state.MoveAll(trick_, won_[winner]);
  }

  void FinishHand(GameState& state) const override {
    for (int p = 0; p < num_players(); ++p) {
      int sum = 0;
      int count = 0;
      auto add = [&](int loc) {
        for (CardId c : state.Cards(loc)) {
          sum += CountValue(state.card(c));
          ++count;
        }
      };
      add(won_[p]);
      if (p == kDealer) add(scarto_);
      state.SetScore(p, sum - 2 * (count / 3));
    }
    state.SetTerminal();
  }

 private:
  int scarto_;
};

}  // namespace

std::shared_ptr<const Game> MakeScarto() { return std::make_shared<Scarto>(); }

}  // namespace valet::games
