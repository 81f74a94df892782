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

// Skitgubbe for three players. In the first phase players play single cards
// in rounds, drawing after each play, and the highest rank wins the round's
// cards; the suit of the last stock card becomes trump. In the second phase
// players take up their winnings and shed them by beating the top card of
// the pile (higher in suit, or a trump on a plain card) or picking the pile
// up. The last player holding cards loses.
//
// Played cards lie face down in per-seat locations while public memory
// locations show their faces, so collecting them never passes through a
// face-up pile.
#include "games/common.h"

namespace valet::games {
namespace {

enum Kind : std::uint8_t { kPlay = 0, kPickUp = 1 };
enum Phase { kDuel = 0, kShed = 1 };

constexpr int kPlayers = 3;
constexpr int kHandSize = 3;

class Skitgubbe : public Game {
 public:
  Skitgubbe()
      : Game(GameMetadata{.id = "skitgubbe",
                          .name = "Skitgubbe",
                          .genre = "Beating",
                          .origin = "Sweden",
                          .year = 1949,
                          .players = kPlayers,
                          .deck_family = "French",
                          .deck = DeckSpec::kFrench52,
                          .scoring = Objective::kOneLoser,
                          .info = InfoLabels::Parse("P, D"),
                          .score_min = 0,
                          .score_max = 1}) {
    stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
    for (int p = 0; p < kPlayers; ++p) {
      const std::string tag = std::to_string(p);
      hand_[p] = AddLocation("hand" + tag, p, Visibility::kPrivate);
      duel_[p] = AddLocation("duel" + tag, p, Visibility::kHidden);
      winnings_[p] = AddLocation("winnings" + tag, p, Visibility::kHidden);
      played_[p] = AddLocation("played" + tag, p, Visibility::kHidden);
    }
    discard_ = AddLocation("discard", kTableOwner, Visibility::kHidden);
    round_ = AddMemory("round", kTableOwner, Visibility::kPublic);
    pile_ = AddMemory("pile", kTableOwner, Visibility::kPublic);
    v_phase_ = AddVar("phase");
    v_trump_ = AddVar("trump");
    v_leader_ = AddVar("leader");
    v_beats_ = AddVar("beats");
  }

  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    if (state.IsTerminal()) return;
    const int seat = state.ToMove();
    for (CardId c : state.Cards(hand_[seat])) {
      if (state.Var(v_phase_) == kDuel || Beats(state, c)) {
        out.push_back(Move{kPlay, c, 0, 0});
      }
    }
    if (out.empty()) out.push_back(Move{kPickUp, 0, 0, 0});
  }

  void ApplyMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (state.Var(v_phase_) == kDuel) {
      Duel(state, seat, move.card);
    } else if (move.kind == kPickUp) {
      PickUp(state, seat);
    } else {
      Shed(state, seat, move.card);
    }
  }

  std::string MoveText(const Move& move) const override {
    if (move.kind == kPickUp) return "pick_up";
    return "play " + CardName(*this, move.card);
  }

 protected:
  void Setup(GameState& state) const override {
    state.Shuffle(stock_);
    state.Chance("deal");
    for (int i = 0; i < kHandSize; ++i) {
      for (int p = 0; p < kPlayers; ++p) state.MoveTop(stock_, hand_[p]);
    }
    state.SetVar(v_phase_, kDuel);
    state.SetVar(v_trump_, -1);
    state.SetVar(v_leader_, 0);
    state.SetToMove(0);
  }

 private:
  void Duel(GameState& state, int seat, CardId card) const {
    state.MoveCard(card, hand_[seat], duel_[seat]);
    state.Remember(card, duel_[seat], round_);
    if (!state.Empty(stock_)) {
      if (state.Size(stock_) == 1) {
        state.SetVar(v_trump_, SuitIndex(state.card(state.Top(stock_)).suit));
      }
      state.MoveTop(stock_, hand_[seat]);
    }
    auto round = state.Cards(round_);
    if (static_cast<int>(round.size()) < kPlayers) {
      state.SetToMove(NextSeat(seat, kPlayers));
      return;
    }
    const int leader = state.Var(v_leader_);
    int best = 0;
    for (int i = 1; i < kPlayers; ++i) {
      if (AceHighOrdinal(state.card(round[i]).rank) >
          AceHighOrdinal(state.card(round[best]).rank)) {
        best = i;
      }
    }
    const int winner = (leader + best) % kPlayers;
    for (int p = 0; p < kPlayers; ++p) {
      state.MoveAll(duel_[p], winnings_[winner]);
    }
    state.ClearMemory(round_);
    state.SetVar(v_leader_, winner);
    if (!state.Empty(stock_)) {
      state.SetToMove(winner);
      return;
    }
    // Second phase: everyone takes up their winnings.
    for (int p = 0; p < kPlayers; ++p) state.MoveAll(winnings_[p], hand_[p]);
    state.SetVar(v_phase_, kShed);
    state.SetVar(v_beats_, 0);
    if (Active(state) <= 1) {
      Finish(state);
      return;
    }
    state.SetToMove(NextActive(state, winner));
  }

  bool Beats(const GameState& state, CardId c) const {
    if (state.Empty(pile_)) return true;
    const Card& top = state.card(state.Top(pile_));
    const Card& card = state.card(c);
    const int trump = state.Var(v_trump_);
    if (card.suit == top.suit) {
      return AceHighOrdinal(card.rank) > AceHighOrdinal(top.rank);
    }
    return SuitIndex(card.suit) == trump;
  }

  void Shed(GameState& state, int seat, CardId card) const {
    state.MoveCard(card, hand_[seat], played_[seat]);
    state.Remember(card, played_[seat], pile_);
    const int beats = state.Var(v_beats_) + 1;
    const int active = Active(state);
    if (active <= 1) {
      Finish(state);
      return;
    }
    // Counting the player who just went out, every player has covered the
    // pile once: it is turned down and the last player leads again.
    if (beats >= active + (state.Empty(hand_[seat]) ? 1 : 0)) {
      for (int p = 0; p < kPlayers; ++p) state.MoveAll(played_[p], discard_);
      state.ClearMemory(pile_);
      state.SetVar(v_beats_, 0);
      state.SetToMove(NextActive(state, seat));
      return;
    }
    state.SetVar(v_beats_, beats);
    state.SetToMove(NextActive(state, NextSeat(seat, kPlayers)));
  }

  void PickUp(GameState& state, int seat) const {
    for (int p = 0; p < kPlayers; ++p) state.MoveAll(played_[p], hand_[seat]);
    state.ClearMemory(pile_);
    state.SetVar(v_beats_, 0);
    state.SetToMove(NextActive(state, NextSeat(seat, kPlayers)));
  }

  int Active(const GameState& state) const {
    int n = 0;
    for (int p = 0; p < kPlayers; ++p) n += state.Empty(hand_[p]) ? 0 : 1;
    return n;
  }

  int NextActive(const GameState& state, int seat) const {
    for (int i = 0; i < kPlayers; ++i) {
      const int p = (seat + i) % kPlayers;
      if (!state.Empty(hand_[p])) return p;
    }
    return seat;
  }

  void Finish(GameState& state) const {
    for (int p = 0; p < kPlayers; ++p) {
      state.SetScore(p, state.Empty(hand_[p]) ? 1 : 0);
    }
    // Nobody left holding cards: the last player to go out loses.
    if (Active(state) == 0) state.SetScore(state.ToMove(), 0);
    state.SetTerminal();
  }

  int stock_;
  int hand_[kPlayers];
  int duel_[kPlayers];
  int winnings_[kPlayers];
  int played_[kPlayers];
  int discard_;
  int round_;
  int pile_;
  int v_phase_, v_trump_, v_leader_, v_beats_;
};

}  // namespace

std::shared_ptr<const Game> MakeSkitgubbe() {
  return std::make_shared<Skitgubbe>();
}

}  // namespace valet::games
