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

// Goofspiel for two players. Diamonds are the prize deck (own back), hearts
// and spades the bidding hands. Each round a prize is turned up and both
// players bid a card face down; the higher bid takes every prize on display.
// Tied prizes stay on display for the next round.
#include "games/common.h"

namespace valet::games {
namespace {

constexpr std::uint8_t kBid = 0;
constexpr int kRounds = 13;

class Goofspiel : public Game {
 public:
  Goofspiel()
      : Game(GameMetadata{.id = "goofspiel",
                          .name = "Goofspiel",
                          .genre = "Collect",
                          .origin = "USA",
                          .year = 1930,
                          .players = 2,
                          .deck_family = "French",
                          .deck = DeckSpec::kGoofspielSplit,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P, B"),
                          .score_min = 0,
                          .score_max = 91}) {
    prizes_ = AddLocation("prizes", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < 2; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    display_ = AddLocation("display", kTableOwner, Visibility::kPublic);
    for (int p = 0; p < 2; ++p) {
      bid_[p] = AddLocation("bid" + std::to_string(p), p, Visibility::kHidden);
    }
    bids_ = AddLocation("revealed_bids", kTableOwner, Visibility::kPublic);
    for (int p = 0; p < 2; ++p) {
      won_[p] = AddLocation("won" + std::to_string(p), p, Visibility::kPublic);
    }
    v_round_ = AddVar("round");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    for (CardId c : state.Cards(hand_[state.ToMove()])) {
      out.push_back(Move{kBid, c, 0, 0});
    }
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    state.MoveCard(move.card, hand_[seat], bid_[seat]);
    if (seat == 0) {
      state.SetToMove(1);
      return;
    }
    const int b0 = FrenchOrdinal(state.card(state.Top(bid_[0])).rank);
    const int b1 = FrenchOrdinal(state.card(state.Top(bid_[1])).rank);
    state.MoveAll(bid_[0], bids_);
    state.MoveAll(bid_[1], bids_);
    if (b0 != b1) {
      const int winner = b0 > b1 ? 0 : 1;
      for (CardId c : state.Cards(display_)) {
        state.AddScore(winner, FrenchOrdinal(state.card(c).rank));
      }
      state.MoveAll(display_, won_[winner]);
    }
    const int round = state.Var(v_round_) + 1;
    state.SetVar(v_round_, round);
    if (round == kRounds) {
      state.SetTerminal();
      return;
    }
    state.MoveTop(prizes_, display_);
    state.SetToMove(0);
  }

  std::string MoveText(const Move& move) const override {
    return "bid " + CardName(*this, move.card);
  }

  bool IsPublicMove(const Move& /*move*/) const override { return false; }

 protected:
  void Setup(GameState& state) const override {
    std::vector<CardId> all(state.Cards(prizes_).begin(),
                            state.Cards(prizes_).end());
    for (CardId c : all) {
      const Suit suit = state.card(c).suit;
      if (suit == Suit::kHearts) state.MoveCard(c, prizes_, hand_[0]);
      if (suit == Suit::kSpades) state.MoveCard(c, prizes_, hand_[1]);
    }
    state.Shuffle(prizes_);
    state.Chance("deal");
    state.MoveTop(prizes_, display_);
    state.SetToMove(0);
  }

 private:
  int prizes_;
  int hand_[2];
  int display_;
  int bid_[2];
  int bids_;
  int won_[2];
  int v_round_;
};

}  // namespace

std::shared_ptr<const Game> MakeGoofspiel() {
  return std::make_shared<Goofspiel>();
}

}  // namespace valet::games
