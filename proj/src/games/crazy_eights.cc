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

// Crazy Eights for three players. A card must match the suit or rank of the
// top discard; eights are wild and name the next suit. A player holding a
// playable card must play; otherwise they draw until they can, and pass once
// the stock is empty. The stock is not reshuffled.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kPlay = 0, kDraw = 1, kPass = 2, kDeclare = 3 };
enum Phase { kTurn = 0, kDeclaring = 1 };

constexpr int kPlayers = 3;
constexpr int kDealer = 2;
constexpr int kHandSize = 5;

int Penalty(int rank) {
  if (rank == 8) return 50;
  if (rank >= kJack) return 10;
  return rank;
}

class CrazyEights : public Game {
 public:
  CrazyEights()
      : Game(GameMetadata{.id = "crazy_eights",
                          .name = "Crazy Eights",
                          .genre = "Shedding",
                          .origin = "USA",
                          .year = 1940,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kLowScore,
                          .info = InfoLabels::Parse("P"),
                          .score_min = 0,
                          .score_max = 508}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    discard_ = AddLocation("discard", kTableOwner, Visibility::kPublic);
    v_phase_ = AddVar("phase");
    v_suit_ = AddVar("suit");
    v_passes_ = AddVar("passes");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    if (state.Var(v_phase_) == kDeclaring) {
      for (int s = 0; s < kNumPlainSuits; ++s) {
        out.push_back(Move{kDeclare, 0, static_cast<std::uint8_t>(s), 0});
      }
      return;
    }
    const int top_rank = state.card(state.Top(discard_)).rank;
    for (CardId c : state.Cards(hand_[state.ToMove()])) {
      const Card& card = state.card(c);
      if (card.rank == 8 || card.rank == top_rank ||
          SuitIndex(card.suit) == state.Var(v_suit_)) {
        out.push_back(Move{kPlay, c, 0, 0});
      }
    }
    if (!out.empty()) return;
    out.push_back(Move{state.Empty(stock_) ? kPass : kDraw, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    switch (move.kind) {
      case kPlay: {
        state.SetVar(v_passes_, 0);
        state.MoveCard(move.card, hand_[seat], discard_);
        const Card& card = state.card(move.card);
        state.SetVar(v_suit_, SuitIndex(card.suit));
        if (state.Empty(hand_[seat])) {
          Finish(state);
        } else if (card.rank == 8) {
          state.SetVar(v_phase_, kDeclaring);
        } else {
          state.SetToMove(NextSeat(seat, kPlayers));
        }
        break;
      }
      case kDeclare:
        state.SetVar(v_suit_, move.arg);
        state.SetVar(v_phase_, kTurn);
        state.SetToMove(NextSeat(seat, kPlayers));
        break;
      case kDraw:
        state.MoveTop(stock_, hand_[seat]);
        break;
      case kPass:
        state.SetVar(v_passes_, state.Var(v_passes_) + 1);
        if (state.Var(v_passes_) == kPlayers) {
          Finish(state);
        } else {
          state.SetToMove(NextSeat(seat, kPlayers));
        }
        break;
    }
  }

  std::string MoveText(const Move& move) const override {
    switch (move.kind) {
      case kPlay: return "play " + CardName(*this, move.card);
      case kDraw: return "draw";
      case kPass: return "pass";
      case kDeclare:
        return std::string("declare ") + SuitChar(static_cast<Suit>(move.arg));
    }
    return "?";
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int i = 0; i < kHandSize; ++i) {
      for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, hand_[p]);
    }
    state.MoveTop(stock_, discard_);
    state.SetVar(v_suit_, SuitIndex(state.card(state.Top(discard_)).suit));
    state.SetToMove(NextSeat(kDealer, kPlayers));
  }

 private:
  void Finish(GameState& state) const {
    for (int p = 0; p < kPlayers; ++p) {
      int penalty = 0;
      for (CardId c : state.Cards(hand_[p])) {
        penalty += Penalty(state.card(c).rank);
      }
      state.SetScore(p, penalty);
    }
    state.SetTerminal();
  }

  int stock_;
  int hand_[kPlayers];
  int discard_;
  int v_phase_, v_suit_, v_passes_;
};

}  // namespace

std::shared_ptr<const Game> MakeCrazyEights() {
  return std::make_shared<CrazyEights>();
}

}  // namespace valet::games
