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

#include "games/common.h"

#include <string>

namespace valet::games {

std::string MaskText(const Game& game, std::string verb, std::uint64_t mask) {
  ForEachBit(mask, [&](CardId c) {
    verb += ' ';
    verb += CardName(game, c);
  });
  return verb;
}

TrickGame::TrickGame(GameMetadata metadata, int hand_size)
    : Game(std::move(metadata)), hand_size_(hand_size) {
  const int n = num_players();
  stock_ = AddLocation("stock", kTableOwner, Visibility::kHidden);
  for (int p = 0; p < n; ++p) {
    hand_.push_back(
        AddLocation("hand" + std::to_string(p), p, Visibility::kPrivate));
  }
  trick_ = AddLocation("trick", kTableOwner, Visibility::kPublic);
  for (int p = 0; p < n; ++p) {
    won_.push_back(
        AddLocation("won" + std::to_string(p), p, Visibility::kPublic));
  }
  v_phase_ = AddVar("phase");
  v_leader_ = AddVar("leader");
  v_tricks_ = AddVar("tricks");
  v_trump_ = AddVar("trump");
}

void TrickGame::ShuffleAndDeal(GameState& state) const {
  state.Shuffle(stock_);
  state.Chance("deal");
  for (int i = 0; i < hand_size_; ++i) {
    for (int p = 0; p < num_players(); ++p) state.MoveTop(stock_, hand_[p]);
  }
}

void TrickGame::StartPlay(GameState& state, int leader) const {
  state.SetVar(v_leader_, leader);
  state.SetVar(v_tricks_, 0);
  state.SetToMove(leader);
}

int TrickGame::EffectiveSuit(const GameState& state, CardId card) const {
  return SuitIndex(state.card(card).suit);
}

int TrickGame::LedSuit(const GameState& state) const {
  if (state.Empty(trick_)) return -1;
  return EffectiveSuit(state, state.Cards(trick_)[0]);
}

bool TrickGame::HasSuit(const GameState& state, int seat, int suit) const {
  for (CardId c : state.Cards(hand_[seat])) {
    if (EffectiveSuit(state, c) == suit) return true;
  }
  return false;
}

void TrickGame::PlayMoves(const GameState& state, int seat,
                          std::vector<Move>& out) const {
  const int led = LedSuit(state);
  const bool follow = led >= 0 && HasSuit(state, seat, led);
  for (CardId c : state.Cards(hand_[seat])) {
    if (!follow || EffectiveSuit(state, c) == led) {
      out.push_back(Move{kPlayCard, c, 0, 0});
    }
  }
}

bool TrickGame::InPlayPhase(const GameState& state) const {
  return state.Var(v_phase_) == 0;
}

void TrickGame::LegalMoves(const GameState& state,
                           std::vector<Move>& out) const {
  if (state.IsTerminal()) return;
  if (InPlayPhase(state)) {
    PlayMoves(state, state.ToMove(), out);
  } else {
    PhaseMoves(state, out);
  }
}

int TrickGame::SeatOfTrickCard(const GameState& state, int index) const {
  return (state.Var(v_leader_) + index) % num_players();
}

int TrickGame::TrickWinner(const GameState& state) const {
  const int led = LedSuit(state);
  auto cards = state.Cards(trick_);
  int best = 0;
  int best_strength = Strength(state, cards[0], led);
  for (int i = 1; i < static_cast<int>(cards.size()); ++i) {
    int s = Strength(state, cards[i], led);
    if (s > best_strength) {
      best = i;
      best_strength = s;
    }
  }
  return SeatOfTrickCard(state, best);
}

void TrickGame::CollectTrick(GameState& state, int winner) const {
  state.MoveAll(trick_, won_[winner]);
}

void TrickGame::ApplyMove(GameState& state, const Move& move) const {
  if (move.kind != kPlayCard) {
    ApplyPhaseMove(state, move);
    return;
  }
  const int seat = state.ToMove();
  state.MoveCard(move.card, hand_[seat], trick_);
  if (state.Size(trick_) < num_players()) {
    state.SetToMove(NextSeat(seat, num_players()));
    return;
  }
  const int winner = TrickWinner(state);
  const int index = state.Var(v_tricks_);
  OnTrickWon(state, winner, index);
  CollectTrick(state, winner);
  state.SetVar(v_tricks_, index + 1);
  state.SetVar(v_leader_, winner);
  if (index + 1 == hand_size_) {
    FinishHand(state);
  } else {
    state.SetToMove(winner);
  }
}

std::string TrickGame::PhaseMoveText(const Move& move) const {
  return "move" + std::to_string(move.kind) + ":" + std::to_string(move.arg);
}

std::string TrickGame::MoveText(const Move& move) const {
  if (move.kind == kPlayCard) return "play " + CardName(*this, move.card);
  return PhaseMoveText(move);
}

void TrickGame::SetTeamScore(GameState& state, int team, int value) const {
  for (int p = 0; p < num_players(); ++p) {
    if (TeamOf(p) == team) state.SetScore(p, value);
  }
}

}  // namespace valet::games
