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

// Go Fish for four players. A player asks one opponent for a rank they hold;
// the opponent hands over every card of that rank face up and the asker goes
// again. Otherwise the asker draws and keeps the turn only when the draw is
// the asked rank. Four of a kind is laid down as a book.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kAsk = 1, kDraw = 2 };

constexpr int kPlayers = 4;
constexpr int kHandSize = 5;
constexpr int kBooks = 13;

class GoFish : public Game {
 public:
  GoFish()
      : Game(GameMetadata{.id = "go_fish",
                          .name = "Go Fish",
                          .genre = "Quartet",
                          .origin = "USA",
                          .year = 1850,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P, T, D"),
                          .sets = true,
                          .score_min = 0,
                          .score_max = kBooks}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    reveal_ = AddLocation("reveal", kTableOwner, Visibility::kPublic);
    for (int p = 0; p < kPlayers; ++p) {
      books_[p] = AddLocation("books" + std::to_string(p), p,
                              Visibility::kPublic);
    }
    v_books_ = AddVar("books");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    std::uint32_t ranks = 0;
    for (CardId c : state.Cards(hand_[seat])) ranks |= 1u << state.card(c).rank;
    for (int other = 0; other < kPlayers; ++other) {
      if (other == seat || state.Empty(hand_[other])) continue;
      for (int r = kAce; r <= kKing; ++r) {
        if (ranks & (1u << r)) {
          out.push_back(Move{kAsk, static_cast<std::uint8_t>(r),
                             static_cast<std::uint8_t>(other), 0});
        }
      }
    }
    if (out.empty()) out.push_back(Move{kDraw, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (move.kind == kDraw) {
      state.MoveTop(stock_, hand_[seat]);
      LayBooks(state, seat);
      Settle(state, seat);
      return;
    }
    const int target = move.arg;
    const int rank = move.card;
    std::vector<CardId> given;
    for (CardId c : state.Cards(hand_[target])) {
      if (state.card(c).rank == rank) given.push_back(c);
    }
    if (!given.empty()) {
      for (CardId c : given) state.MoveCard(c, hand_[target], reveal_);
      state.MoveAll(reveal_, hand_[seat]);
      LayBooks(state, seat);
      Settle(state, seat);
      return;
    }
    bool again = false;
    if (!state.Empty(stock_)) {
      const CardId drawn = state.Top(stock_);
      state.MoveTop(stock_, hand_[seat]);
      again = state.card(drawn).rank == rank;
      LayBooks(state, seat);
    }
    Settle(state, again ? seat : NextSeat(seat, kPlayers));
  }

  std::string MoveText(const Move& move) const override {
    if (move.kind == kDraw) return "draw";
    return "ask " + std::to_string(move.arg) + " " + RankText(move.card);
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int i = 0; i < kHandSize; ++i) {
      for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, hand_[p]);
    }
    Settle(state, 0);
  }

 private:
  void LayBooks(GameState& state, int seat) const {
    int count[kKing + 1] = {};
    for (CardId c : state.Cards(hand_[seat])) ++count[state.card(c).rank];
    for (int r = kAce; r <= kKing; ++r) {
      if (count[r] != 4) continue;
      std::vector<CardId> book;
      for (CardId c : state.Cards(hand_[seat])) {
        if (state.card(c).rank == r) book.push_back(c);
      }
      for (CardId c : book) state.MoveCard(c, hand_[seat], books_[seat]);
      state.AddScore(seat, 1);
      state.SetVar(v_books_, state.Var(v_books_) + 1);
    }
  }

  // Hands the turn to the first seat from `seat` on that can act: it can
  // ask an opponent holding cards, or draw.
  void Settle(GameState& state, int seat) const {
    // Sampled deals for search can hand a seat four of a kind.
    for (int p = 0; p < kPlayers; ++p) LayBooks(state, p);
    if (state.Var(v_books_) == kBooks) {
      state.SetTerminal();
      return;
    }
    int holders = 0;
    for (int p = 0; p < kPlayers; ++p) holders += state.Empty(hand_[p]) ? 0 : 1;
    for (int i = 0; i < kPlayers; ++i) {
      const int p = (seat + i) % kPlayers;
      const bool can_ask = !state.Empty(hand_[p]) && holders > 1;
      if (can_ask || !state.Empty(stock_)) {
        state.SetToMove(p);
        return;
      }
    }
    state.SetTerminal();
  }

  int stock_;
  int hand_[kPlayers];
  int reveal_;
  int books_[kPlayers];
  int v_books_;
};

}  // namespace

std::shared_ptr<const Game> MakeGoFish() { return std::make_shared<GoFish>(); }

}  // namespace valet::games
