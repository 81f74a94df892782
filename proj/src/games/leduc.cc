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

// Leduc Hold'em: six cards, one private card each, one public board card,
// two betting rounds with fixed raises of 2 and 4 and at most two raises per
// round. A pair with the board wins, else the higher card.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kFold = 1, kCall = 2, kRaise = 3 };

constexpr int kAnte = 1;
constexpr int kMaxRaises = 2;

class Leduc : public Game {
 public:
  Leduc()
      : Game(GameMetadata{.id = "leduc",
                          .name = "Leduc Hold'em",
                          .genre = "Poker",
                          .origin = "Canada",
                          .year = 2005,
                          .players = 2,
                          .deck_family = "Unique",
                          .deck = DeckSpec::kLeduc6,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P"),
                          .score_min = -13,
                          .score_max = 13}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    hand_[0] = AddLocation("hand0", 0, Visibility::kPrivate);
    hand_[1] = AddLocation("hand1", 1, Visibility::kPrivate);
    board_ = AddLocation("board", kTableOwner, Visibility::kPublic);
    v_round_ = AddVar("round");
    v_raises_ = AddVar("raises");
    v_acted_ = AddVar("acted");
    v_bet_[0] = AddVar("bet0");
    v_bet_[1] = AddVar("bet1");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    if (state.Var(v_bet_[1 - seat]) > state.Var(v_bet_[seat])) {
      out.push_back(Move{kFold, 0, 0, 0});
    }
    out.push_back(Move{kCall, 0, 0, 0});
    if (state.Var(v_raises_) < kMaxRaises) out.push_back(Move{kRaise, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    const int other = 1 - seat;
    if (move.kind == kFold) {
      const int lost = state.Var(v_bet_[seat]);
      state.SetScore(seat, -lost);
      state.SetScore(other, lost);
      state.SetTerminal();
      return;
    }
    state.SetVar(v_bet_[seat], state.Var(v_bet_[other]));
    if (move.kind == kRaise) {
      const int size = state.Var(v_round_) == 0 ? 2 : 4;
      state.SetVar(v_bet_[seat], state.Var(v_bet_[seat]) + size);
      state.SetVar(v_raises_, state.Var(v_raises_) + 1);
    }
    state.SetVar(v_acted_, state.Var(v_acted_) + 1);
    const bool closed = state.Var(v_acted_) >= 2 &&
                        state.Var(v_bet_[0]) == state.Var(v_bet_[1]);
    if (!closed) {
      state.SetToMove(other);
      return;
    }
    if (state.Var(v_round_) == 0) {
      state.MoveTop(stock_, board_);
      state.SetVar(v_round_, 1);
      state.SetVar(v_raises_, 0);
      state.SetVar(v_acted_, 0);
      state.SetToMove(0);
      return;
    }
    Showdown(state);
  }

  std::string MoveText(const Move& move) const override {
    switch (move.kind) {
      case kFold: return "fold";
      case kCall: return "call";
      case kRaise: return "raise";
    }
    return "?";
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    state.MoveTop(stock_, hand_[0]);
    state.MoveTop(stock_, hand_[1]);
    state.SetVar(v_bet_[0], kAnte);
    state.SetVar(v_bet_[1], kAnte);
    state.SetToMove(0);
  }

 private:
  int Strength(const GameState& state, int seat) const {
    const int rank = state.card(state.Top(hand_[seat])).rank;
    const int board = state.card(state.Top(board_)).rank;
    return rank == board ? 100 + rank : rank;
  }

  void Showdown(GameState& state) const {
    const int s0 = Strength(state, 0);
    const int s1 = Strength(state, 1);
    const int pot = state.Var(v_bet_[0]);
    if (s0 != s1) {
      const int winner = s0 > s1 ? 0 : 1;
      state.SetScore(winner, pot);
      state.SetScore(1 - winner, -pot);
    }
    state.SetTerminal();
  }

  int stock_, hand_[2], board_;
  int v_round_, v_raises_, v_acted_, v_bet_[2];
};

}  // namespace

std::shared_ptr<const Game> MakeLeduc() { return std::make_shared<Leduc>(); }

}  // namespace valet::games
