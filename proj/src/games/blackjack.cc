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

// Single-seat Blackjack against the house: two-card deal, dealer peeks for
// a natural, optional insurance against an ace, hit or stand. No splitting
// or doubling; the dealer stands on every 17. Scores are net chips on a
// two-chip bet.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kHit = 1, kStand = 2, kInsure = 3, kDecline = 4 };
enum Phase { kPlaying = 0, kInsurance = 1 };

constexpr int kBet = 2;
constexpr int kNaturalWin = 3;
constexpr int kInsuranceCost = 1;
constexpr int kInsurancePays = 2;

int PointValue(int rank) {
  if (rank >= kJack) return 10;
  return rank;
}

// Best total counting one ace as 11 when that does not bust.
int HandTotal(const GameState& state, std::span<const CardId> cards) {
  int total = 0;
  bool ace = false;
  for (CardId c : cards) {
    const int rank = state.card(c).rank;
    total += PointValue(rank);
    ace |= rank == kAce;
  }
  if (ace && total + 10 <= 21) total += 10;
  return total;
}

class Blackjack : public Game {
 public:
  Blackjack()
      : Game(GameMetadata{.id = "blackjack",
                          .name = "BlackJack",
                          .genre = "Banking",
                          .origin = "France",
                          .year = 1930,
                          .players = 1,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kHighScore,
                          .score_min = -3,
                          .score_max = 3}) {
    shoe_ = AddLocation("shoe", kTableOwner, Visibility::kHidden);
    hand_ = AddLocation("hand", 0, Visibility::kPublic);
    up_ = AddLocation("dealer_up", kTableOwner, Visibility::kPublic);
    hole_ = AddLocation("dealer_hole", kTableOwner, Visibility::kHidden);
    v_phase_ = AddVar("phase");
    v_insured_ = AddVar("insured");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    if (state.Var(v_phase_) == kInsurance) {
      out.push_back(Move{kInsure, 0, 0, 0});
      out.push_back(Move{kDecline, 0, 0, 0});
      return;
    }
    out.push_back(Move{kHit, 0, 0, 0});
    out.push_back(Move{kStand, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    switch (move.kind) {
      case kInsure:
        state.SetVar(v_insured_, 1);
        state.AddScore(0, -kInsuranceCost);
        [[fallthrough]];
      case kDecline:
        state.SetVar(v_phase_, kPlaying);
        Peek(state);
        break;
      case kHit:
        state.MoveTop(shoe_, hand_);
        if (HandTotal(state, state.Cards(hand_)) > 21) {
          state.AddScore(0, -kBet);
          state.SetTerminal();
        }
        break;
      case kStand:
        DealerPlays(state);
        break;
    }
  }

  std::string MoveText(const Move& move) const override {
    switch (move.kind) {
      case kHit: return "hit";
      case kStand: return "stand";
      case kInsure: return "insure";
      case kDecline: return "decline";
    }
    return "?";
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(shoe_);
    state.Chance("deal");
    state.MoveTop(shoe_, hand_);
    state.MoveTop(shoe_, up_);
    state.MoveTop(shoe_, hand_);
    state.MoveTop(shoe_, hole_);
    state.SetToMove(0);
    if (state.card(state.Top(up_)).rank == kAce) {
      state.SetVar(v_phase_, kInsurance);
    } else {
      Peek(state);
    }
  }

 private:
  bool DealerNatural(const GameState& state) const {
    return PointValue(state.card(state.Top(up_)).rank) +
               PointValue(state.card(state.Top(hole_)).rank) ==
               11 &&
           (state.card(state.Top(up_)).rank == kAce ||
            state.card(state.Top(hole_)).rank == kAce);
  }

  // Settles naturals; otherwise leaves the player to act.
  void Peek(GameState& state) const {
    const bool player_natural = HandTotal(state, state.Cards(hand_)) == 21;
    if (DealerNatural(state)) {
      state.MoveAll(hole_, up_);
      if (state.Var(v_insured_) != 0) state.AddScore(0, kInsurancePays);
      if (!player_natural) state.AddScore(0, -kBet);
      state.SetTerminal();
      return;
    }
    if (player_natural) {
      state.MoveAll(hole_, up_);
      state.AddScore(0, kNaturalWin);
      state.SetTerminal();
    }
  }

  void DealerPlays(GameState& state) const {
    state.MoveAll(hole_, up_);
    while (HandTotal(state, state.Cards(up_)) < 17) {
      state.MoveTop(shoe_, up_);
    }
    const int dealer = HandTotal(state, state.Cards(up_));
    const int player = HandTotal(state, state.Cards(hand_));
    if (dealer > 21 || player > dealer) {
      state.AddScore(0, kBet);
    } else if (player < dealer) {
      state.AddScore(0, -kBet);
    }
    state.SetTerminal();
  }

  int shoe_, hand_, up_, hole_;
  int v_phase_, v_insured_;
};

}  // namespace

std::shared_ptr<const Game> MakeBlackjack() {
  return std::make_shared<Blackjack>();
}

}  // namespace valet::games
