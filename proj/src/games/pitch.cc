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

// Auction Pitch for two partnerships: one round of bidding (2-4, dealer is
// stuck at 2 when everyone passes), the bidder's first lead fixes trump, and
// points go for High, Low, Jack and Game.
#include "games/common.h"

namespace valet::games {
namespace {

enum Phase { kPlay = 0, kBidding = 1 };
enum Kind : std::uint8_t { kBid = 1, kPass = 2 };

constexpr int kDealer = 3;

int GamePoints(int rank) {
  switch (rank) {
    case 10: return 10;
    case kAce: return 4;
    case kKing: return 3;
    case kQueen: return 2;
    case kJack: return 1;
    default: return 0;
  }
}

class Pitch : public TrickGame {
 public:
  Pitch()
      : TrickGame(GameMetadata{.id = "pitch",
                               .name = "Pitch",
                               .genre = "High-Low-Jack",
                               .origin = "England",
                               .year = 1800,
                               .players = 4,
                               .deck_family = "French",
                               .deck = DeckSpec::kFrench52,
                               .scoring = Objective::kHighScore,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .teams = true,
                               .score_min = -4,
                               .score_max = 4,
                               .team_of_seat = {0, 1, 0, 1}},
                  /*hand_size=*/6) {
    v_high_bid_ = AddVar("high_bid");
    v_bidder_ = AddVar("bidder");
    v_high_ = AddVar("high_trump");
    v_high_team_ = AddVar("high_team");
    v_low_ = AddVar("low_trump");
    v_low_team_ = AddVar("low_team");
    v_jack_team_ = AddVar("jack_team");
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    if (move.kind == kPlayCard && state.Var(v_trump_) < 0) {
      state.SetVar(v_trump_, SuitIndex(state.card(move.card).suit));
    }
    TrickGame::ApplyMove(state, move);
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    state.SetVar(v_trump_, -1);
    state.SetVar(v_high_bid_, 0);
    state.SetVar(v_bidder_, -1);
    state.SetVar(v_high_, -1);
    state.SetVar(v_low_, 99);
    state.SetVar(v_high_team_, -1);
    state.SetVar(v_low_team_, -1);
    state.SetVar(v_jack_team_, -1);
    state.SetVar(v_phase_, kBidding);
    state.SetToMove(0);
  }

  void PhaseMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    const int high = state.Var(v_high_bid_);
    for (int bid = std::max(2, high + 1); bid <= 4; ++bid) {
      out.push_back(Move{kBid, 0, static_cast<std::uint8_t>(bid), 0});
    }
    if (!(state.ToMove() == kDealer && high == 0)) {
      out.push_back(Move{kPass, 0, 0, 0});
    }
  }

  void ApplyPhaseMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (move.kind == kBid) {
      state.SetVar(v_high_bid_, move.arg);
      state.SetVar(v_bidder_, seat);
    }
    if (seat != kDealer) {
      state.SetToMove(seat + 1);
      return;
    }
    state.SetVar(v_phase_, kPlay);
    StartPlay(state, state.Var(v_bidder_));
  }

  std::string PhaseMoveText(const Move& move) const override {
    if (move.kind == kBid) return "bid " + std::to_string(move.arg);
    return "pass";
  }

  void PlayMoves(const GameState& state, int seat,
                 std::vector<Move>& out) const override {
    const int led = LedSuit(state);
    const int trump = state.Var(v_trump_);
    const bool follow = led >= 0 && HasSuit(state, seat, led);
    for (CardId c : state.Cards(hand_[seat])) {
      const int suit = SuitIndex(state.card(c).suit);
      if (!follow || suit == led || suit == trump) {
        out.push_back(Move{kPlayCard, c, 0, 0});
      }
    }
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
    auto cards = state.Cards(trick_);
    for (int i = 0; i < static_cast<int>(cards.size()); ++i) {
      const Card& c = state.card(cards[i]);
      if (SuitIndex(c.suit) != state.Var(v_trump_)) continue;
      const int order = AceHighOrdinal(c.rank);
      const int team = TeamOf(SeatOfTrickCard(state, i));
      // Every dealt card is played, so the seat that plays a trump is the
      // seat it was dealt to.
      if (order > state.Var(v_high_)) {
        state.SetVar(v_high_, order);
        state.SetVar(v_high_team_, team);
      }
      if (order < state.Var(v_low_)) {
        state.SetVar(v_low_, order);
        state.SetVar(v_low_team_, team);
      }
      if (c.rank == kJack) state.SetVar(v_jack_team_, TeamOf(winner));
    }
  }

  void FinishHand(GameState& state) const override {
    int points[2] = {0, 0};
    points[state.Var(v_high_team_)] += 1;
    points[state.Var(v_low_team_)] += 1;
    if (state.Var(v_jack_team_) >= 0) points[state.Var(v_jack_team_)] += 1;
    int game[2] = {0, 0};
    for (int p = 0; p < 4; ++p) {
      for (CardId c : state.Cards(won_[p])) {
        game[TeamOf(p)] += GamePoints(state.card(c).rank);
      }
    }
    if (game[0] != game[1]) points[game[0] > game[1] ? 0 : 1] += 1;
    const int bidders = TeamOf(state.Var(v_bidder_));
    const int bid = state.Var(v_high_bid_);
    if (points[bidders] < bid) points[bidders] = -bid;
    SetTeamScore(state, 0, points[0]);
    SetTeamScore(state, 1, points[1]);
    state.SetTerminal();
  }

 private:
  int v_high_bid_, v_bidder_, v_high_, v_high_team_, v_low_, v_low_team_,
      v_jack_team_;
};

}  // namespace

std::shared_ptr<const Game> MakePitch() { return std::make_shared<Pitch>(); }

}  // namespace valet::games
