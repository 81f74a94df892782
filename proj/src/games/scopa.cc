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

// Scopa for two players with the 40-card Italian deck. A played card
// captures a table card of equal value, or failing that a group of table
// cards summing to its value; capturing is compulsory. Clearing the table is
// a scopa. Points go for most cards, most coins, the sette bello, primiera
// and each scopa.
#include "games/common.h"

namespace valet::games {
namespace {

constexpr std::uint8_t kPlay = 0;
constexpr int kPlayers = 2;
constexpr int kHandSize = 3;
constexpr int kTableSize = 4;
// Coins are stored in the diamonds suit.
constexpr Suit kCoins = Suit::kDiamonds;

// Face cards count 8, 9, 10.
int CaptureValue(int rank) {
  switch (rank) {
    case kJack: return 8;
    case kCavalier: return 9;
    case kKing: return 10;
    default: return rank;
  }
}

int PrimieraValue(int rank) {
  switch (rank) {
    case 7: return 21;
    case 6: return 18;
    case kAce: return 16;
    case 5: return 15;
    case 4: return 14;
    case 3: return 13;
    case 2: return 12;
    default: return 10;
  }
}

class Scopa : public Game {
 public:
  Scopa()
      : Game(GameMetadata{.id = "scopa",
                          .name = "Scopa",
                          .genre = "Fishing",
                          .origin = "Italy",
                          .year = 1700,
                          .players = kPlayers,
                          .deck_family = "Italian",
                          .deck = DeckSpec::kItalian40,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P"),
                          .score_min = 0,
                          .score_max = 22}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    table_ = AddLocation("table", kTableOwner, Visibility::kPublic);
    for (int p = 0; p < kPlayers; ++p) {
      captured_[p] = AddLocation("captured" + std::to_string(p), p,
                                 Visibility::kPublic);
    }
    v_last_capture_ = AddVar("last_capturer");
    v_scopas_[0] = AddVar("scopas0");
    v_scopas_[1] = AddVar("scopas1");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    auto table = state.Cards(table_);
    for (CardId c : state.Cards(hand_[state.ToMove()])) {
      const int value = CaptureValue(state.card(c).rank);
      const std::size_t before = out.size();
      for (CardId t : table) {
        if (CaptureValue(state.card(t).rank) == value) {
          out.push_back(Move{kPlay, c, 0, Bit(t)});
        }
      }
      if (out.size() == before) {
        const int n = static_cast<int>(table.size());
        for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
          int sum = 0;
          std::uint64_t mask = 0;
          for (int i = 0; i < n; ++i) {
            if (sub & (1u << i)) {
              sum += CaptureValue(state.card(table[i]).rank);
              mask |= Bit(table[i]);
            }
          }
          if (sum == value) out.push_back(Move{kPlay, c, 0, mask});
        }
      }
      if (out.size() == before) out.push_back(Move{kPlay, c, 0, 0});
    }
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (move.mask == 0) {
      state.MoveCard(move.card, hand_[seat], table_);
    } else {
      state.MoveCard(move.card, hand_[seat], captured_[seat]);
      ForEachBit(move.mask, [&](CardId c) {
        state.MoveCard(c, table_, captured_[seat]);
      });
      state.SetVar(v_last_capture_, seat);
      const bool final_play = state.Empty(stock_) &&
                              state.Empty(hand_[0]) && state.Empty(hand_[1]);
      if (state.Empty(table_) && !final_play) {
        state.SetVar(v_scopas_[seat], state.Var(v_scopas_[seat]) + 1);
      }
    }
    const int next = NextSeat(seat, kPlayers);
    if (!state.Empty(hand_[next])) {
      state.SetToMove(next);
      return;
    }
    if (!state.Empty(stock_)) {
      DealHands(state);
      state.SetToMove(0);
      return;
    }
    Finish(state);
  }

  std::string MoveText(const Move& move) const override {
    std::string text = "play " + CardName(*this, move.card);
    if (move.mask != 0) text += MaskText(*this, " capture", move.mask);
    return text;
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    DealHands(state);
    state.Deal(stock_, table_, kTableSize);
    state.SetVar(v_last_capture_, -1);
    state.SetToMove(0);
  }

 private:
  void DealHands(GameState& state) const {
    for (int i = 0; i < kHandSize; ++i) {
      for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, hand_[p]);
    }
  }

  // Best primiera total, or -1 when a suit is missing.
  int Primiera(const GameState& state, int seat) const {
    int best[kNumPlainSuits] = {-1, -1, -1, -1};
    for (CardId c : state.Cards(captured_[seat])) {
      const Card& card = state.card(c);
      int& b = best[SuitIndex(card.suit)];
      b = std::max(b, PrimieraValue(card.rank));
    }
    int total = 0;
    for (int b : best) {
      if (b < 0) return -1;
      total += b;
    }
    return total;
  }

  void Finish(GameState& state) const {
    const int last = state.Var(v_last_capture_);
    if (last >= 0) state.MoveAll(table_, captured_[last]);
    int cards[kPlayers], coins[kPlayers], primiera[kPlayers];
    for (int p = 0; p < kPlayers; ++p) {
      cards[p] = state.Size(captured_[p]);
      coins[p] = 0;
      for (CardId c : state.Cards(captured_[p])) {
        const Card& card = state.card(c);
        if (card.suit != kCoins) continue;
        ++coins[p];
        if (card.rank == 7) state.AddScore(p, 1);
      }
      primiera[p] = Primiera(state, p);
      state.AddScore(p, state.Var(v_scopas_[p]));
    }
    auto award = [&](const int* counts) {
      if (counts[0] != counts[1]) state.AddScore(counts[0] > counts[1] ? 0 : 1, 1);
    };
    award(cards);
    award(coins);
    award(primiera);
    state.SetTerminal();
  }

  int stock_;
  int hand_[kPlayers];
  int table_;
  int captured_[kPlayers];
  int v_last_capture_;
  int v_scopas_[kPlayers];
};

}  // namespace

std::shared_ptr<const Game> MakeScopa() { return std::make_shared<Scopa>(); }

}  // namespace valet::games
