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

// Six-card Golf for four players. Each player has a 2x3 grid dealt face down
// and turns two cards up before play. A turn draws from the stock or takes
// the top discard, then replaces a grid card or throws the drawn card away.
// The hand ends one round after some grid is fully face up, or when the
// stock runs out. Equal ranks in a column cancel.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t {
  kFlip = 1,
  kDrawStock = 2,
  kTakeDiscard = 3,
  kReplace = 4,
  kThrow = 5,
};
enum Phase { kFlipping = 0, kChooseSource = 1, kHoldingDraw = 2 };

constexpr int kPlayers = 4;
constexpr int kSlots = 6;
constexpr int kColumns = 3;
constexpr int kInitialFlips = 2;

int CardValue(int rank) {
  switch (rank) {
    case 2: return -2;
    case kKing: return 0;
    case kJack:
    case kQueen: return 10;
    default: return rank;
  }
}

class Golf6 : public Game {
 public:
  Golf6()
      : Game(GameMetadata{.id = "golf6",
                          .name = "Golf-6",
                          .genre = "Draw & Discard",
                          .origin = "USA",
                          .year = std::nullopt,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kLowScore,
                          .info = InfoLabels::Parse("P"),
                          .score_min = -6,
                          .score_max = 60}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    discard_ = AddLocation("discard", kTableOwner, Visibility::kPublic);
    for (int p = 0; p < kPlayers; ++p) {
      const std::string tag = std::to_string(p);
      for (int k = 0; k < kSlots; ++k) {
        down_[p][k] = AddLocation("down" + tag + "_" + std::to_string(k), p,
                                  Visibility::kHidden);
        up_[p][k] = AddLocation("up" + tag + "_" + std::to_string(k), p,
                                Visibility::kPublic);
      }
      drawn_[p] = AddLocation("drawn" + tag, p, Visibility::kPrivate);
    }
    v_phase_ = AddVar("phase");
    v_flips_ = AddVar("flips");
    v_finisher_ = AddVar("finisher");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    auto slot = [](int kind, int k) {
      return Move{static_cast<std::uint8_t>(kind), 0,
                  static_cast<std::uint8_t>(k), 0};
    };
    switch (state.Var(v_phase_)) {
      case kFlipping:
        for (int k = 0; k < kSlots; ++k) {
          if (!state.Empty(down_[seat][k])) out.push_back(slot(kFlip, k));
        }
        break;
      case kChooseSource:
        if (!state.Empty(stock_)) out.push_back(slot(kDrawStock, 0));
        if (!state.Empty(discard_)) {
          for (int k = 0; k < kSlots; ++k) out.push_back(slot(kTakeDiscard, k));
        }
        break;
      case kHoldingDraw:
        for (int k = 0; k < kSlots; ++k) out.push_back(slot(kReplace, k));
        out.push_back(slot(kThrow, 0));
        break;
    }
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    const int k = move.arg;
    switch (move.kind) {
      case kFlip: {
        state.MoveTop(down_[seat][k], up_[seat][k]);
        const int flips = state.Var(v_flips_) + 1;
        state.SetVar(v_flips_, flips);
        if (flips % kInitialFlips != 0) return;
        if (flips == kInitialFlips * kPlayers) {
          state.SetVar(v_phase_, kChooseSource);
          state.SetToMove(0);
        } else {
          state.SetToMove(seat + 1);
        }
        return;
      }
      case kDrawStock:
        state.MoveTop(stock_, drawn_[seat]);
        state.SetVar(v_phase_, kHoldingDraw);
        return;
      case kTakeDiscard: {
        const CardId taken = state.Top(discard_);
        DiscardSlot(state, seat, k);
        state.MoveCard(taken, discard_, up_[seat][k]);
        break;
      }
      case kReplace:
        DiscardSlot(state, seat, k);
        state.MoveTop(drawn_[seat], up_[seat][k]);
        break;
      case kThrow:
        state.MoveTop(drawn_[seat], discard_);
        break;
    }
    EndTurn(state, seat);
  }

  std::string MoveText(const Move& move) const override {
    const std::string k = std::to_string(move.arg);
    switch (move.kind) {
      case kFlip: return "flip " + k;
      case kDrawStock: return "draw";
      case kTakeDiscard: return "take_discard " + k;
      case kReplace: return "replace " + k;
      case kThrow: return "throw";
    }
    return "?";
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int k = 0; k < kSlots; ++k) {
      for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, down_[p][k]);
    }
    state.MoveTop(stock_, discard_);
    state.SetVar(v_phase_, kFlipping);
    state.SetVar(v_finisher_, -1);
    state.SetToMove(0);
  }

 private:
  // Moves the card in slot k (face up or down) to the discard pile.
  void DiscardSlot(GameState& state, int seat, int k) const {
    if (!state.Empty(down_[seat][k])) {
      state.MoveTop(down_[seat][k], discard_);
    } else {
      state.MoveCard(state.Cards(up_[seat][k])[0], up_[seat][k], discard_);
    }
  }

  bool AllFaceUp(const GameState& state, int seat) const {
    for (int k = 0; k < kSlots; ++k) {
      if (!state.Empty(down_[seat][k])) return false;
    }
    return true;
  }

  void EndTurn(GameState& state, int seat) const {
    state.SetVar(v_phase_, kChooseSource);
    if (state.Var(v_finisher_) < 0 && AllFaceUp(state, seat)) {
      state.SetVar(v_finisher_, seat);
    }
    const int next = NextSeat(seat, kPlayers);
    if (next == state.Var(v_finisher_) || state.Empty(stock_)) {
      Finish(state);
      return;
    }
    state.SetToMove(next);
  }

  void Finish(GameState& state) const {
    for (int p = 0; p < kPlayers; ++p) {
      int rank[kSlots];
      for (int k = 0; k < kSlots; ++k) {
        if (!state.Empty(down_[p][k])) state.MoveTop(down_[p][k], up_[p][k]);
        rank[k] = state.card(state.Top(up_[p][k])).rank;
      }
      int total = 0;
      for (int c = 0; c < kColumns; ++c) {
        if (rank[c] != rank[c + kColumns]) {
          total += CardValue(rank[c]) + CardValue(rank[c + kColumns]);
        }
      }
      state.SetScore(p, total);
    }
    state.SetTerminal();
  }

  int stock_;
  int discard_;
  int down_[kPlayers][kSlots];
  int up_[kPlayers][kSlots];
  int drawn_[kPlayers];
  int v_phase_, v_flips_, v_finisher_;
};

}  // namespace

std::shared_ptr<const Game> MakeGolf6() { return std::make_shared<Golf6>(); }

}  // namespace valet::games
