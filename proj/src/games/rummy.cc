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

// Block Rummy for two players. Each turn draws from the stock or takes the
// top discard, optionally lays down sets and runs or lays off on any meld on
// the table, and ends with a discard. The game ends when a player goes out
// or when the stock is empty at the end of a turn. Aces are low.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t {
  kDrawStock = 1,
  kTakeDiscard = 2,
  kMeld = 3,
  kLayOff = 4,
  kDiscard = 5,
};
enum Phase { kDrawing = 0, kActing = 1 };

constexpr int kPlayers = 2;
constexpr int kHandSize = 10;
constexpr int kMaxMelds = 17;

int Deadwood(int rank) { return rank >= kJack ? 10 : rank; }

class Rummy : public Game {
 public:
  Rummy()
      : Game(GameMetadata{.id = "rummy",
                          .name = "Rummy",
                          .genre = "Rummy",
                          .origin = "Mexico",
                          .year = 1900,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kLowScore,
                          .info = InfoLabels::Parse("P, T"),
                          .sets = true,
                          .score_min = 0,
                          .score_max = 100}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    discard_ = AddLocation("discard", kTableOwner, Visibility::kPublic);
    for (int m = 0; m < kMaxMelds; ++m) {
      meld_[m] = AddLocation("meld" + std::to_string(m), kTableOwner,
                             Visibility::kPublic);
    }
    v_phase_ = AddVar("phase");
    v_melds_ = AddVar("melds");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    if (state.Var(v_phase_) == kDrawing) {
      if (!state.Empty(stock_)) out.push_back(Move{kDrawStock, 0, 0, 0});
      if (!state.Empty(discard_)) out.push_back(Move{kTakeDiscard, 0, 0, 0});
      return;
    }
    auto hand = state.Cards(hand_[seat]);
    MeldMoves(state, hand, out);
    for (int m = 0; m < state.Var(v_melds_); ++m) {
      for (CardId c : hand) {
        if (Extends(state, m, state.card(c))) {
          out.push_back(Move{kLayOff, c, static_cast<std::uint8_t>(m), 0});
        }
      }
    }
    for (CardId c : hand) out.push_back(Move{kDiscard, c, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    switch (move.kind) {
      case kDrawStock:
        state.MoveTop(stock_, hand_[seat]);
        state.SetVar(v_phase_, kActing);
        return;
      case kTakeDiscard:
        state.MoveTop(discard_, hand_[seat]);
        state.SetVar(v_phase_, kActing);
        return;
      case kMeld: {
        const int m = state.Var(v_melds_);
        // Runs are stored in ascending rank order.
        std::vector<CardId> cards;
        ForEachBit(move.mask, [&](CardId c) { cards.push_back(c); });
        std::sort(cards.begin(), cards.end(), [&](CardId a, CardId b) {
          return state.card(a).rank < state.card(b).rank;
        });
        for (CardId c : cards) state.MoveCard(c, hand_[seat], meld_[m]);
        state.SetVar(v_melds_, m + 1);
        if (state.Empty(hand_[seat])) Finish(state);
        return;
      }
      case kLayOff:
        state.MoveCard(move.card, hand_[seat], meld_[move.arg]);
        if (state.Empty(hand_[seat])) Finish(state);
        return;
      case kDiscard:
        state.MoveCard(move.card, hand_[seat], discard_);
        if (state.Empty(hand_[seat]) || state.Empty(stock_)) {
          Finish(state);
          return;
        }
        state.SetVar(v_phase_, kDrawing);
        state.SetToMove(NextSeat(seat, kPlayers));
        return;
    }
  }

  std::string MoveText(const Move& move) const override {
    switch (move.kind) {
      case kDrawStock: return "draw";
      case kTakeDiscard: return "take_discard";
      case kMeld: return MaskText(*this, "meld", move.mask);
      case kLayOff:
        return "layoff " + CardName(*this, move.card) + " " +
               std::to_string(move.arg);
      case kDiscard: return "discard " + CardName(*this, move.card);
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
    state.SetVar(v_phase_, kDrawing);
    state.SetToMove(0);
  }

 private:
  static void MeldMoves(const GameState& state, std::span<const CardId> hand,
                        std::vector<Move>& out) {
    std::uint64_t by_rank[kKing + 1] = {};
    CardId at[kNumPlainSuits][kKing + 2];
    bool has[kNumPlainSuits][kKing + 2] = {};
    for (CardId c : hand) {
      const Card& card = state.card(c);
      const int r = FrenchOrdinal(card.rank);
      by_rank[r] |= Bit(c);
      has[SuitIndex(card.suit)][r] = true;
      at[SuitIndex(card.suit)][r] = c;
    }
    for (int r = 1; r <= 13; ++r) {
      const std::uint64_t cards = by_rank[r];
      if (std::popcount(cards) < 3) continue;
      for (std::uint64_t sub = cards; sub != 0; sub = (sub - 1) & cards) {
        if (std::popcount(sub) >= 3) out.push_back(Move{kMeld, 0, 0, sub});
      }
    }
    for (int s = 0; s < kNumPlainSuits; ++s) {
      for (int lo = 1; lo <= 11; ++lo) {
        std::uint64_t run = 0;
        for (int r = lo; r <= 13 && has[s][r]; ++r) {
          run |= Bit(at[s][r]);
          if (r - lo >= 2) out.push_back(Move{kMeld, 0, 0, run});
        }
      }
    }
  }

  bool Extends(const GameState& state, int m, const Card& card) const {
    auto cards = state.Cards(meld_[m]);
    const Card& first = state.card(cards.front());
    const Card& second = state.card(cards[1]);
    if (first.rank == second.rank) return card.rank == first.rank;
    if (card.suit != first.suit) return false;
    int lo = 99, hi = 0;
    for (CardId c : cards) {
      const int r = FrenchOrdinal(state.card(c).rank);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const int r = FrenchOrdinal(card.rank);
    return r == lo - 1 || r == hi + 1;
  }

  void Finish(GameState& state) const {
    for (int p = 0; p < kPlayers; ++p) {
      int total = 0;
      for (CardId c : state.Cards(hand_[p])) {
        total += Deadwood(state.card(c).rank);
      }
      state.SetScore(p, total);
    }
    state.SetTerminal();
  }

  int stock_;
  int hand_[kPlayers];
  int discard_;
  int meld_[kMaxMelds];
  int v_phase_, v_melds_;
};

}  // namespace

std::shared_ptr<const Game> MakeRummy() { return std::make_shared<Rummy>(); }

}  // namespace valet::games
