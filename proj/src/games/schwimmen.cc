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

// Schwimmen (Einunddreissig) for five players with a 32-card deck. The
// dealer gets a spare hand and either keeps their own cards (the spare goes
// to the middle) or swaps hands, laying the old one away face down. Players
// then trade with the three middle cards, pass or knock. A hand worth 31
// ends the game at once; a knock gives everyone else one more turn.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t {
  kKeep = 1,
  kExchange = 2,
  kSwapOne = 3,
  kSwapAll = 4,
  kPass = 5,
  kKnock = 6,
};
enum Phase { kTrading = 0, kDealerChoice = 1 };

constexpr int kPlayers = 5;
constexpr int kDealer = kPlayers - 1;
constexpr int kHandSize = 3;
constexpr int kThirtyOne = 31;
constexpr int kThreeOfAKind = 30;

int PointValue(int rank) {
  if (rank == kAce) return 11;
  if (rank >= 10) return 10;
  return rank;
}

class Schwimmen : public Game {
 public:
  Schwimmen()
      : Game(GameMetadata{.id = "schwimmen",
                          .name = "Schwimmen",
                          .genre = "Commerce",
                          .origin = "Austria",
                          .year = 1718,
                          .players = kPlayers,
                          .deck_family = "Piquet",
                          .deck = DeckSpec::kPiquet32,
                          .scoring = Objective::kHighScore,
                          .info = InfoLabels::Parse("P, T, S"),
                          .sets = true,
                          .score_min = 7,
                          .score_max = kThirtyOne}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      hand_[p] = AddLocation("hand" + std::to_string(p), p,
                             Visibility::kPrivate);
    }
    spare_ = AddLocation("spare", kTableOwner, Visibility::kHidden);
    middle_ = AddLocation("middle", kTableOwner, Visibility::kPublic);
    discard_ = AddLocation("discard", kTableOwner, Visibility::kHidden);
    v_phase_ = AddVar("phase");
    v_passes_ = AddVar("passes");
    v_knocker_ = AddVar("knocker");
    v_turns_left_ = AddVar("turns_left");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    if (state.Var(v_phase_) == kDealerChoice) {
      out.push_back(Move{kKeep, 0, 0, 0});
      out.push_back(Move{kExchange, 0, 0, 0});
      return;
    }
    for (CardId mine : state.Cards(hand_[state.ToMove()])) {
      for (CardId middle : state.Cards(middle_)) {
        out.push_back(Move{kSwapOne, mine, middle, 0});
      }
    }
    out.push_back(Move{kSwapAll, 0, 0, 0});
    out.push_back(Move{kPass, 0, 0, 0});
    if (state.Var(v_knocker_) < 0) out.push_back(Move{kKnock, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    const int hand = hand_[seat];
    switch (move.kind) {
      case kKeep:
        state.MoveAll(spare_, middle_);
        break;
      case kExchange:
        state.MoveAll(hand, discard_);
        state.MoveAll(spare_, hand);
        state.Deal(stock_, middle_, kHandSize);
        break;
      case kSwapOne:
        state.MoveCard(move.card, hand, middle_);
        state.MoveCard(move.arg, middle_, hand);
        break;
      case kSwapAll: {
        std::vector<CardId> mine(state.Cards(hand).begin(),
                                 state.Cards(hand).end());
        state.MoveAll(middle_, hand);
        for (CardId c : mine) state.MoveCard(c, hand, middle_);
        break;
      }
      default:
        break;
    }
    if (move.kind == kKeep || move.kind == kExchange) {
      state.SetVar(v_phase_, kTrading);
      if (HandValue(state, hand) == kThirtyOne) {
        Finish(state);
      } else {
        state.SetToMove(0);
      }
      return;
    }
    if (HandValue(state, hand) == kThirtyOne) {
      Finish(state);
      return;
    }
    if (state.Var(v_knocker_) >= 0) {
      const int left = state.Var(v_turns_left_) - 1;
      state.SetVar(v_turns_left_, left);
      if (left == 0) {
        Finish(state);
        return;
      }
    }
    if (move.kind == kKnock) {
      state.SetVar(v_knocker_, seat);
      state.SetVar(v_turns_left_, kPlayers - 1);
    }
    if (move.kind != kPass) {
      state.SetVar(v_passes_, 0);
    } else if (state.Var(v_passes_) + 1 < kPlayers) {
      state.SetVar(v_passes_, state.Var(v_passes_) + 1);
    } else {
      // Everyone passed: the middle is replaced from the stock.
      state.SetVar(v_passes_, 0);
      if (state.Size(stock_) < kHandSize) {
        Finish(state);
        return;
      }
      state.MoveAll(middle_, discard_);
      state.Deal(stock_, middle_, kHandSize);
    }
    state.SetToMove(NextSeat(seat, kPlayers));
  }

  std::string MoveText(const Move& move) const override {
    switch (move.kind) {
      case kKeep: return "keep";
      case kExchange: return "exchange";
      case kSwapOne:
        return "swap " + CardName(*this, move.card) + " " +
               CardName(*this, move.arg);
      case kSwapAll: return "swap_all";
      case kPass: return "pass";
      case kKnock: return "knock";
    }
    return "?";
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int i = 0; i < kHandSize; ++i) {
      for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, hand_[p]);
      state.MoveTop(stock_, spare_);
    }
    state.SetVar(v_phase_, kDealerChoice);
    state.SetVar(v_knocker_, -1);
    state.SetToMove(kDealer);
  }

 private:
  int HandValue(const GameState& state, int loc) const {
    auto cards = state.Cards(loc);
    int by_suit[kNumPlainSuits] = {};
    bool same_rank = true;
    for (CardId c : cards) {
      const Card& card = state.card(c);
      by_suit[SuitIndex(card.suit)] += PointValue(card.rank);
      same_rank &= card.rank == state.card(cards[0]).rank;
    }
    int best = *std::max_element(by_suit, by_suit + kNumPlainSuits);
    if (same_rank) best = std::max(best, kThreeOfAKind);
    return best;
  }

  void Finish(GameState& state) const {
    for (int p = 0; p < kPlayers; ++p) {
      state.SetScore(p, HandValue(state, hand_[p]));
    }
    state.SetTerminal();
  }

  int stock_;
  int hand_[kPlayers];
  int spare_;
  int middle_;
  int discard_;
  int v_phase_, v_passes_, v_knocker_, v_turns_left_;
};

}  // namespace

std::shared_ptr<const Game> MakeSchwimmen() {
  return std::make_shared<Schwimmen>();
}

}  // namespace valet::games
