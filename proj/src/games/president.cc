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

// President for five players with the whole deck dealt. Twos are high and
// threes low. The leader plays any number of cards of one rank; the others
// must play as many cards of a higher rank or pass. A player who passes sits
// out the rest of the round, which ends when every other player has passed.
// Finishing order is scored 4..0.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kPlay = 0, kPass = 1 };

constexpr int kPlayers = 5;

// 3 lowest .. K, A, 2 highest.
int ClimbOrder(int rank) {
  if (rank == 2) return 15;
  return AceHighOrdinal(rank);
}

class President : public Game {
 public:
  President()
      : Game(GameMetadata{.id = "president",
                          .name = "President",
                          .genre = "Climbing",
                          .origin = "China",
                          .year = 1960,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P"),
                          .sets = true,
                          .score_min = 0,
                          .score_max = kPlayers - 1}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    pile_ = AddLocation("pile", kTableOwner, Visibility::kPublic);
    discard_ = AddLocation("discard", kTableOwner, Visibility::kPublic);
    v_count_ = AddVar("count");
    v_top_ = AddVar("top_order");
    v_last_ = AddVar("last_player");
    v_passed_ = AddVar("passed_mask");
    v_finished_ = AddVar("finished");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    const int count = state.Var(v_count_);
    std::uint64_t by_order[16] = {};
    for (CardId c : state.Cards(hand_[seat])) {
      by_order[ClimbOrder(state.card(c).rank)] |= Bit(c);
    }
    for (int order = 3; order <= 15; ++order) {
      const std::uint64_t cards = by_order[order];
      if (cards == 0) continue;
      if (count > 0 && order <= state.Var(v_top_)) continue;
      // Every non-empty subset of this rank, with the right size when
      // following.
      for (std::uint64_t sub = cards; sub != 0; sub = (sub - 1) & cards) {
        if (count == 0 || std::popcount(sub) == count) {
          out.push_back(Move{kPlay, 0, 0, sub});
        }
      }
    }
    if (count > 0) out.push_back(Move{kPass, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (move.kind == kPlay) {
      ForEachBit(move.mask, [&](CardId c) {
        state.MoveCard(c, hand_[seat], pile_);
      });
      state.SetVar(v_count_, std::popcount(move.mask));
      state.SetVar(v_top_, ClimbOrder(state.card(std::countr_zero(move.mask))
                                          .rank));
      state.SetVar(v_last_, seat);
      if (state.Empty(hand_[seat])) {
        const int place = state.Var(v_finished_);
        state.SetScore(seat, kPlayers - 1 - place);
        state.SetVar(v_finished_, place + 1);
        if (place + 1 == kPlayers - 1) {
          // The last player holding cards takes the bottom score of 0.
          state.SetTerminal();
          return;
        }
      }
    } else {
      state.SetVar(v_passed_, state.Var(v_passed_) | (1 << seat));
    }
    const int last = state.Var(v_last_);
    const int next = NextInRound(state, NextSeat(seat, kPlayers), last);
    if (next < 0) {
      state.MoveAll(pile_, discard_);
      state.SetVar(v_count_, 0);
      state.SetVar(v_passed_, 0);
      state.SetToMove(NextActive(state, last));
      return;
    }
    state.SetToMove(next);
  }

  std::string MoveText(const Move& move) const override {
    if (move.kind == kPass) return "pass";
    return MaskText(*this, "play", move.mask);
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int i = 0; !state.Empty(stock_); ++i) {
      state.MoveTop(stock_, hand_[i % kPlayers]);
    }
    state.SetVar(v_last_, 0);
    state.SetToMove(0);
  }

 private:
  // First seat from `seat` on that holds cards and has not passed, other
  // than the player who made the last play; -1 when the round is over.
  int NextInRound(const GameState& state, int seat, int last) const {
    for (int i = 0; i < kPlayers; ++i) {
      const int p = (seat + i) % kPlayers;
      if (p == last || state.Empty(hand_[p])) continue;
      if ((state.Var(v_passed_) & (1 << p)) == 0) return p;
    }
    return -1;
  }

  // First seat from `seat` on that still holds cards.
  int NextActive(const GameState& state, int seat) const {
    for (int i = 0; i < kPlayers; ++i) {
      const int p = (seat + i) % kPlayers;
      if (!state.Empty(hand_[p])) return p;
    }
    return seat;
  }

  int stock_;
  int hand_[kPlayers];
  int pile_;
  int discard_;
  int v_count_, v_top_, v_last_, v_passed_, v_finished_;
};

}  // namespace

std::shared_ptr<const Game> MakePresident() {
  return std::make_shared<President>();
}

}  // namespace valet::games
