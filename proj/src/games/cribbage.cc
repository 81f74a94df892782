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

// Two-player Cribbage played for two deals (each player deals once). Each
// player lays two cards away to the dealer's crib, a starter is cut, the
// hands are pegged to 31 and then shown. Points accumulate over both deals.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kDiscard = 1, kPeg = 2 };
enum Phase { kDiscarding = 0, kPegging = 1 };

constexpr int kPlayers = 2;
constexpr int kDealSize = 6;
constexpr int kDiscards = 2;
constexpr int kRounds = 2;
constexpr int kFirstDealer = 1;

int CountValue(int rank) { return rank >= kJack ? 10 : rank; }

// Fifteens, pairs and runs of a set of cards.
int ComboPoints(const GameState& state, const std::vector<CardId>& cards) {
  const int n = static_cast<int>(cards.size());
  int points = 0;
  for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if (sub & (1u << i)) sum += CountValue(state.card(cards[i]).rank);
    }
    if (sum == 15) points += 2;
  }
  int count[14] = {};
  for (CardId c : cards) ++count[FrenchOrdinal(state.card(c).rank)];
  for (int r = 1; r <= 13; ++r) points += count[r] * (count[r] - 1);
  for (int lo = 1; lo <= 13;) {
    int hi = lo;
    int ways = 1;
    while (hi <= 13 && count[hi] > 0) ways *= count[hi++];
    if (hi - lo >= 3) points += (hi - lo) * ways;
    lo = hi + 1;
  }
  return points;
}

class Cribbage : public Game {
 public:
  Cribbage()
      : Game(GameMetadata{.id = "cribbage",
                          .name = "Cribbage",
                          .genre = "Adding",
                          .origin = "England",
                          .year = 1600,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P, T, S, D"),
                          .sets = true,
                          .score_min = 0,
                          .score_max = 250}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    crib_ = AddLocation("crib", kTableOwner, Visibility::kHidden);
    starter_ = AddLocation("starter", kTableOwner, Visibility::kPublic);
    for (int p = 0; p < kPlayers; ++p) {
      played_[p] = AddLocation("played" + std::to_string(p), p,
                               Visibility::kPublic);
    }
    sequence_ = AddMemory("sequence", kTableOwner, Visibility::kPublic);
    v_round_ = AddVar("round");
    v_dealer_ = AddVar("dealer");
    v_phase_ = AddVar("phase");
    v_count_ = AddVar("count");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    const bool pegging = state.Var(v_phase_) == kPegging;
    for (CardId c : state.Cards(hand_[seat])) {
      if (!pegging) {
        out.push_back(Move{kDiscard, c, 0, 0});
      } else if (Playable(state, c)) {
        out.push_back(Move{kPeg, c, 0, 0});
      }
    }
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (move.kind == kDiscard) {
      state.MoveCard(move.card, hand_[seat], crib_);
      if (state.Size(hand_[seat]) > kDealSize - kDiscards) return;
      if (seat == 0) {
        state.SetToMove(1);
      } else {
        CutStarter(state);
      }
      return;
    }
    Peg(state, seat, move.card);
  }

  std::string MoveText(const Move& move) const override {
    return (move.kind == kDiscard ? "discard " : "peg ") +
           CardName(*this, move.card);
  }

 protected:
  void Setup(GameState& state) const override { StartRound(state, 0); }

 private:
  bool Playable(const GameState& state, CardId c) const {
    return state.Var(v_count_) + CountValue(state.card(c).rank) <= 31;
  }

  bool CanPlay(const GameState& state, int seat) const {
    for (CardId c : state.Cards(hand_[seat])) {
      if (Playable(state, c)) return true;
    }
    return false;
  }

  void StartRound(GameState& state, int round) const {
    for (int loc : {hand_[0], hand_[1], crib_, starter_}) {
      state.MoveAll(loc, stock_);
    }
    const int dealer = round == 0 ? kFirstDealer : 1 - kFirstDealer;
    state.SetVar(v_round_, round);
    state.SetVar(v_dealer_, dealer);
    state.SetVar(v_phase_, kDiscarding);
    state.SetVar(v_count_, 0);
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int i = 0; i < kDealSize; ++i) {
      state.MoveTop(stock_, hand_[1 - dealer]);
      state.MoveTop(stock_, hand_[dealer]);
    }
    state.SetToMove(0);
  }

  void CutStarter(GameState& state) const {
    const int dealer = state.Var(v_dealer_);
    state.Chance("cut");
    state.MoveTop(stock_, starter_);
    if (state.card(state.Top(starter_)).rank == kJack) {
      state.AddScore(dealer, 2);
    }
    state.SetVar(v_phase_, kPegging);
    state.SetToMove(1 - dealer);
  }

  int PeggingPoints(const GameState& state) const {
    auto seq = state.Cards(sequence_);
    const int n = static_cast<int>(seq.size());
    int points = 0;
    const int count = state.Var(v_count_);
    if (count == 15 || count == 31) points += 2;
    const int last_rank = state.card(seq[n - 1]).rank;
    int same = 1;
    while (same < n && state.card(seq[n - 1 - same]).rank == last_rank) ++same;
    points += same * (same - 1);
    for (int len = n; len >= 3; --len) {
      int lo = 99, hi = 0;
      std::uint32_t seen = 0;
      bool distinct = true;
      for (int i = n - len; i < n; ++i) {
        const int r = FrenchOrdinal(state.card(seq[i]).rank);
        distinct &= (seen & (1u << r)) == 0;
        seen |= 1u << r;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      if (distinct && hi - lo == len - 1) {
        points += len;
        break;
      }
    }
    return points;
  }

  void Peg(GameState& state, int seat, CardId card) const {
    state.MoveCard(card, hand_[seat], played_[seat]);
    state.Remember(card, played_[seat], sequence_);
    state.SetVar(v_count_,
                 state.Var(v_count_) + CountValue(state.card(card).rank));
    state.AddScore(seat, PeggingPoints(state));
    const int other = 1 - seat;
    if (state.Var(v_count_) < 31) {
      if (CanPlay(state, other)) {
        state.SetToMove(other);
        return;
      }
      if (CanPlay(state, seat)) {
        state.SetToMove(seat);
        return;
      }
      // Go, or last card.
      state.AddScore(seat, 1);
    }
    state.SetVar(v_count_, 0);
    state.ClearMemory(sequence_);
    if (!state.Empty(hand_[other])) {
      state.SetToMove(other);
    } else if (!state.Empty(hand_[seat])) {
      state.SetToMove(seat);
    } else {
      Show(state);
    }
  }

  std::vector<CardId> WithStarter(const GameState& state, int loc) const {
    std::vector<CardId> cards(state.Cards(loc).begin(), state.Cards(loc).end());
    cards.push_back(state.Top(starter_));
    return cards;
  }

  int ShowPoints(const GameState& state, int loc, bool crib) const {
    const std::vector<CardId> cards = WithStarter(state, loc);
    int points = ComboPoints(state, cards);
    const Card& starter = state.card(state.Top(starter_));
    bool flush = true;
    for (CardId c : state.Cards(loc)) {
      const Card& card = state.card(c);
      flush &= card.suit == state.card(state.Cards(loc)[0]).suit;
      if (card.rank == kJack && card.suit == starter.suit) points += 1;
    }
    if (flush) {
      const bool five = state.card(state.Cards(loc)[0]).suit == starter.suit;
      if (five) {
        points += 5;
      } else if (!crib) {
        points += 4;
      }
    }
    return points;
  }

  void Show(GameState& state) const {
    for (int p = 0; p < kPlayers; ++p) state.MoveAll(played_[p], hand_[p]);
    const int dealer = state.Var(v_dealer_);
    state.AddScore(1 - dealer, ShowPoints(state, hand_[1 - dealer], false));
    state.AddScore(dealer, ShowPoints(state, hand_[dealer], false));
    state.AddScore(dealer, ShowPoints(state, crib_, true));
    const int round = state.Var(v_round_) + 1;
    if (round == kRounds) {
      state.SetTerminal();
    } else {
      StartRound(state, round);
    }
  }

  int stock_;
  int hand_[kPlayers];
  int crib_;
  int starter_;
  int played_[kPlayers];
  int sequence_;
  int v_round_, v_dealer_, v_phase_, v_count_;
};

}  // namespace

std::shared_ptr<const Game> MakeCribbage() {
  return std::make_shared<Cribbage>();
}

}  // namespace valet::games
