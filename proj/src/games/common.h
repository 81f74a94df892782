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

#ifndef VALET_GAMES_COMMON_H_
#define VALET_GAMES_COMMON_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "valet/card.h"
#include "valet/game.h"
#include "valet/move.h"
#include "valet/state.h"

namespace valet::games {

inline int NextSeat(int seat, int players) { return (seat + 1) % players; }

inline int SuitIndex(Suit s) { return static_cast<int>(s); }

// French court cards as consecutive ordinals: A=1 .. 10, J=11, Q=12, K=13.
inline int FrenchOrdinal(int rank) {
  switch (rank) {
    case kJack: return 11;
    case kQueen: return 12;
    case kKing: return 13;
    default: return rank;
  }
}

// Ace-high ordinal for French cards: 2=2 .. K=13, A=14.
inline int AceHighOrdinal(int rank) {
  return rank == kAce ? 14 : FrenchOrdinal(rank);
}

inline std::uint64_t Bit(CardId c) { return std::uint64_t{1} << c; }

template <typename F>
void ForEachBit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    f(static_cast<CardId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

// "<verb> AS 10H" for a card mask.
std::string MaskText(const Game& game, std::string verb, std::uint64_t mask);

inline std::string CardName(const Game& game, CardId c) {
  return CardText(game.card(c));
}

inline constexpr std::uint8_t kPlayCard = 0;

// Shared structure of trick-taking games: a stock, private hands, one public
// trick location and public won-trick piles. Subclasses add bidding phases,
// suit-following rules and scoring.
class TrickGame : public Game {
 public:
  void LegalMoves(const GameState& state,
                  std::vector<Move>& out) const override;
  void ApplyMove(GameState& state, const Move& move) const override;
  std::string MoveText(const Move& move) const override;

 protected:
  TrickGame(GameMetadata metadata, int hand_size);

  // Suit a card counts as (Euchre's left bower counts as trump).
  virtual int EffectiveSuit(const GameState& state, CardId card) const;
  // Strength of a card inside the current trick; the strongest card wins.
  // Cards that neither follow nor trump should return a negative value.
  virtual int Strength(const GameState& state, CardId card,
                       int led_suit) const = 0;
  // Suit led in the current trick, or -1 before the first card.
  virtual int LedSuit(const GameState& state) const;
  // Default: follow suit when possible, else anything.
  virtual void PlayMoves(const GameState& state, int seat,
                         std::vector<Move>& out) const;
  // Moves of non-play phases (bidding, trump selection, ...).
  virtual void PhaseMoves(const GameState& /*state*/,
                          std::vector<Move>& /*out*/) const {}
  virtual void ApplyPhaseMove(GameState& /*state*/,
                              const Move& /*move*/) const {}
  virtual std::string PhaseMoveText(const Move& move) const;
  virtual bool InPlayPhase(const GameState& state) const;
  virtual void CollectTrick(GameState& state, int winner) const;
  virtual void OnTrickWon(GameState& /*state*/, int /*winner*/,
                          int /*trick_index*/) const {}
  // Called after the last trick; must score and set the state terminal.
  virtual void FinishHand(GameState& state) const = 0;

  // Deals `hand_size` cards to every seat starting with seat 0, after a
  // shuffle of the stock.
  void ShuffleAndDeal(GameState& state) const;
  int SeatOfTrickCard(const GameState& state, int index) const;
  int TrickWinner(const GameState& state) const;
  void StartPlay(GameState& state, int leader) const;
  // Cards of `seat`'s hand with the given effective suit.
  bool HasSuit(const GameState& state, int seat, int suit) const;
  int TeamOf(int seat) const { return metadata().team_of_seat[seat]; }
  // Gives both partners the same score.
  void SetTeamScore(GameState& state, int team, int value) const;

  int hand_size_;
  int stock_;
  std::vector<int> hand_;
  int trick_;
  std::vector<int> won_;
  int v_phase_;
  int v_leader_;
  int v_tricks_;
  int v_trump_;  // suit index or -1
};

// Registration hooks, one per game.
std::shared_ptr<const Game> MakeAgram();
std::shared_ptr<const Game> MakeBlackjack();
std::shared_ptr<const Game> MakeCrazyEights();
std::shared_ptr<const Game> MakeCribbage();
std::shared_ptr<const Game> MakeCuckoo();
std::shared_ptr<const Game> MakeEuchre();
std::shared_ptr<const Game> MakeGoFish();
std::shared_ptr<const Game> MakeGolf6();
std::shared_ptr<const Game> MakeGoofspiel();
std::shared_ptr<const Game> MakeHearts();
std::shared_ptr<const Game> MakeKlaverjassen();
std::shared_ptr<const Game> MakeLeduc();
std::shared_ptr<const Game> MakePitch();
std::shared_ptr<const Game> MakePresident();
std::shared_ptr<const Game> MakeRummy();
std::shared_ptr<const Game> MakeScarto();
std::shared_ptr<const Game> MakeSchwimmen();
std::shared_ptr<const Game> MakeScopa();
std::shared_ptr<const Game> MakeSkitgubbe();
std::shared_ptr<const Game> MakeSueca();
std::shared_ptr<const Game> MakeWhist();

}  // namespace valet::games

#endif  // VALET_GAMES_COMMON_H_
