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

#ifndef VALET_STATE_H_
#define VALET_STATE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "valet/card.h"
#include "valet/game.h"
#include "valet/move.h"

namespace valet {

inline constexpr int kTerminal = -2;

// Receives every card movement and chance event of a traced state.
class EventSink {
 public:
  virtual ~EventSink() = default;
  // `reference` is true when a card reference is copied into a memory
  // location; the card itself stays in `from`.
  virtual void OnCardMove(CardId card, int from, int to, bool reference) = 0;
  virtual void OnChance(std::string_view kind) = 0;
};

// A move as seen by the table: the acting seat and its payload. Secret moves
// are kept but rendered anonymously in observations.
struct Announcement {
  int seat = 0;
  Move move;
  bool operator==(const Announcement&) const = default;
};

// Full game state: card locations, per-game variables, per-seat scores and
// the seat to move. Copies are deep and cheap (one flat card buffer) and
// never carry the event sink.
class GameState {
 public:
  explicit GameState(const Game& game);
  GameState(const GameState& other);
  GameState& operator=(const GameState& other);
  GameState(GameState&&) noexcept = default;
  GameState& operator=(GameState&&) noexcept = default;

  const Game& game() const { return *game_; }
  int num_locations() const { return static_cast<int>(sizes_.size()); }

  std::span<const CardId> Cards(int loc) const {
    return {slots_.data() + static_cast<std::size_t>(loc) * capacity_,
            sizes_[loc]};
  }
  int Size(int loc) const { return sizes_[loc]; }
  bool Empty(int loc) const { return sizes_[loc] == 0; }
  CardId Top(int loc) const { return Cards(loc).back(); }
  bool Contains(int loc, CardId card) const;
  const Card& card(CardId id) const { return game_->card(id); }

  // Card movement. All of these report to the attached sink.
  void MoveCard(CardId card, int from, int to);
  void MoveTop(int from, int to);
  void MoveAll(int from, int to);
  void Deal(int from, int to, int count);
  // Copies a reference of `card` (which sits in `from`) into a memory
  // location.
  void Remember(CardId card, int from, int memory);
  void ClearMemory(int memory);
  // Permutes a location with the state's chance stream.
  void Shuffle(int loc);
  void Chance(std::string_view kind);

  // Direct placement without events, for state construction.
  void SetCards(int loc, std::span<const CardId> cards);

  int Var(int index) const { return vars_[index]; }
  void SetVar(int index, int value) { vars_[index] = value; }
  std::span<const int> Vars() const { return vars_; }

  int Score(int seat) const { return scores_[seat]; }
  void SetScore(int seat, int value) { scores_[seat] = value; }
  void AddScore(int seat, int delta) { scores_[seat] += delta; }
  std::span<const int> Scores() const { return scores_; }

  int ToMove() const { return to_move_; }
  void SetToMove(int seat) { to_move_ = seat; }
  bool IsTerminal() const { return to_move_ == kTerminal; }
  void SetTerminal() { to_move_ = kTerminal; }

  std::uint64_t chance_seed() const { return chance_seed_; }
  void set_chance_seed(std::uint64_t seed) { chance_seed_ = seed; }

  const std::vector<Announcement>& History() const { return history_; }
  void AppendHistory(int seat, const Move& move) {
    history_.push_back({seat, move});
  }

  void AttachSink(EventSink* sink) { sink_ = sink; }
  EventSink* sink() const { return sink_; }

 private:
  CardId* Begin(int loc) {
    return slots_.data() + static_cast<std::size_t>(loc) * capacity_;
  }
  void Remove(CardId card, int loc);
  void Push(CardId card, int loc);

  const Game* game_;
  std::size_t capacity_;
  std::vector<CardId> slots_;
  std::vector<std::uint8_t> sizes_;
  std::vector<int> vars_;
  std::vector<int> scores_;
  std::vector<Announcement> history_;
  int to_move_ = kTerminal;
  std::uint64_t chance_seed_ = 0;
  EventSink* sink_ = nullptr;
};

}  // namespace valet

#endif  // VALET_STATE_H_
