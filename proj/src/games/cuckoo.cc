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

// Cuckoo (Coucou): one card each. In turn every player may keep their card
// or swap with the left neighbour, who refuses when holding a king. The
// dealer may instead cut the stock. The lowest card loses; among equal
// lowest cards the later seat loses.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kKeep = 1, kSwap = 2, kCut = 3 };

constexpr int kPlayers = 6;
constexpr int kDealer = kPlayers - 1;

class Cuckoo : public Game {
 public:
  Cuckoo()
      : Game(GameMetadata{.id = "cuckoo",
                          .name = "Cuckoo",
                          .genre = "Exchange",
                          .origin = "France",
                          .year = 1490,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kOneLoser,
                          .info = InfoLabels::Parse("P, S, D"),
                          .score_min = 0,
                          .score_max = 1}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    v_refused_ = AddVar("refused");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    out.push_back(Move{kKeep, 0, 0, 0});
    out.push_back(Move{state.ToMove() == kDealer ? kCut : kSwap, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    state.SetVar(v_refused_, 0);
    if (move.kind == kSwap) {
      const int next = seat + 1;
      if (state.card(state.Top(hand_[next])).rank == kKing) {
        state.SetVar(v_refused_, 1);
      } else {
        const CardId mine = state.Top(hand_[seat]);
        state.MoveTop(hand_[next], hand_[seat]);
        state.MoveCard(mine, hand_[seat], hand_[next]);
      }
    } else if (move.kind == kCut) {
      const CardId mine = state.Top(hand_[seat]);
      state.MoveTop(stock_, hand_[seat]);
      state.MoveCard(mine, hand_[seat], stock_);
    }
    if (seat != kDealer) {
      state.SetToMove(seat + 1);
      return;
    }
    int loser = 0;
    int lowest = 99;
    for (int p = 0; p < kPlayers; ++p) {
      const int rank = FrenchOrdinal(state.card(state.Top(hand_[p])).rank);
      if (rank <= lowest) {
        lowest = rank;
        loser = p;
      }
    }
    for (int p = 0; p < kPlayers; ++p) state.SetScore(p, p == loser ? 0 : 1);
    state.SetTerminal();
  }

  std::string MoveText(const Move& move) const override {
    switch (move.kind) {
      case kKeep: return "keep";
      case kSwap: return "swap";
      case kCut: return "cut";
    }
    return "?";
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, hand_[p]);
    state.SetToMove(0);
  }

 private:
  int stock_;
  int hand_[kPlayers];
  int v_refused_;
};

}  // namespace

std::shared_ptr<const Game> MakeCuckoo() { return std::make_shared<Cuckoo>(); }

}  // namespace valet::games
