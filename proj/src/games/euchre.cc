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

// Euchre, American rules without the Joker. Two bidding rounds on the
// turned-up card, stick-the-dealer, no going alone.
#include "games/common.h"

namespace valet::games {
namespace {

enum Phase { kPlay = 0, kBidUpcard = 1, kBidSuit = 2, kDealerDiscard = 3 };
enum Kind : std::uint8_t {
  kOrderUp = 1,
  kPass = 2,
  kNameSuit = 3,
  kDiscard = 4,
};

constexpr int kDealer = 3;

class Euchre : public TrickGame {
 public:
  Euchre()
      : TrickGame(GameMetadata{.id = "euchre",
                               .name = "Euchre",
                               .genre = "Euchre",
                               .origin = "USA",
                               .year = 1820,
                               .players = 4,
                               .deck_family = "Unique",
                               .deck = DeckSpec::kEuchre24,
                               .scoring = Objective::kHighScore,
                               .info = InfoLabels::Parse("P, T, S, D"),
                               .tricks = true,
                               .teams = true,
                               .score_min = 0,
                               .score_max = 2,
                               .team_of_seat = {0, 1, 0, 1}},
                  /*hand_size=*/5) {
    upcard_ = AddLocation("upcard", kTableOwner, Visibility::kPublic);
    v_turned_suit_ = AddVar("turned_suit");
    v_makers_ = AddVar("makers");
    v_team_tricks_[0] = AddVar("team0_tricks");
    v_team_tricks_[1] = AddVar("team1_tricks");
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    state.MoveTop(stock_, upcard_);
    state.SetVar(v_trump_, -1);
    state.SetVar(v_makers_, -1);
    state.SetVar(v_turned_suit_,
                 SuitIndex(state.card(state.Top(upcard_)).suit));
    state.SetVar(v_phase_, kBidUpcard);
    state.SetToMove(0);
  }

  void PhaseMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    const int seat = state.ToMove();
    switch (state.Var(v_phase_)) {
      case kBidUpcard:
        out.push_back(Move{kOrderUp, 0, 0, 0});
        out.push_back(Move{kPass, 0, 0, 0});
        break;
      case kBidSuit:
        for (int s = 0; s < kNumPlainSuits; ++s) {
          if (s != state.Var(v_turned_suit_)) {
            out.push_back(Move{kNameSuit, 0, static_cast<std::uint8_t>(s), 0});
          }
        }
        if (seat != kDealer) out.push_back(Move{kPass, 0, 0, 0});
        break;
      case kDealerDiscard:
        for (CardId c : state.Cards(hand_[kDealer])) {
          out.push_back(Move{kDiscard, c, 0, 0});
        }
        break;
    }
  }

  void ApplyPhaseMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    switch (move.kind) {
      case kOrderUp:
        state.SetVar(v_trump_, state.Var(v_turned_suit_));
        state.SetVar(v_makers_, TeamOf(seat));
        state.MoveTop(upcard_, hand_[kDealer]);
        state.SetVar(v_phase_, kDealerDiscard);
        state.SetToMove(kDealer);
        break;
      case kPass:
        if (seat != kDealer) {
          state.SetToMove(seat + 1);
        } else {
          // Everyone passed on the upcard: turn it down and bid suits.
          state.MoveTop(upcard_, stock_);
          state.SetVar(v_phase_, kBidSuit);
          state.SetToMove(0);
        }
        break;
      case kNameSuit:
        state.SetVar(v_trump_, move.arg);
        state.SetVar(v_makers_, TeamOf(seat));
        state.SetVar(v_phase_, kPlay);
        StartPlay(state, 0);
        break;
      case kDiscard:
        state.MoveCard(move.card, hand_[kDealer], stock_);
        state.SetVar(v_phase_, kPlay);
        StartPlay(state, 0);
        break;
    }
  }

  std::string PhaseMoveText(const Move& move) const override {
    switch (move.kind) {
      case kOrderUp: return "order_up";
      case kPass: return "pass";
      case kNameSuit:
        return std::string("name ") + SuitChar(static_cast<Suit>(move.arg));
      case kDiscard: return "discard " + CardName(*this, move.card);
    }
    return "?";
  }

  bool IsRightBower(const GameState& state, const Card& c) const {
    return c.rank == kJack && SuitIndex(c.suit) == state.Var(v_trump_);
  }
  bool IsLeftBower(const GameState& state, const Card& c) const {
    const int trump = state.Var(v_trump_);
    return trump >= 0 && c.rank == kJack && SuitIndex(c.suit) == 3 - trump;
  }

  int EffectiveSuit(const GameState& state, CardId card) const override {
    const Card& c = state.card(card);
    if (IsLeftBower(state, c)) return state.Var(v_trump_);
    return SuitIndex(c.suit);
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    if (IsRightBower(state, c)) return 200;
    if (IsLeftBower(state, c)) return 199;
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
    const int makers = state.Var(v_makers_);
    const int made = state.Var(v_team_tricks_[makers]);
    if (made == 5) {
      SetTeamScore(state, makers, 2);
    } else if (made >= 3) {
      SetTeamScore(state, makers, 1);
    } else {
      SetTeamScore(state, 1 - makers, 2);
    }
    state.SetTerminal();
  }

 private:
  int upcard_;
  int v_turned_suit_;
  int v_makers_;
  int v_team_tricks_[2];
};

}  // namespace

std::shared_ptr<const Game> MakeEuchre() { return std::make_shared<Euchre>(); }

}  // namespace valet::games
