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

#ifndef VALET_ENGINE_H_
#define VALET_ENGINE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "valet/game.h"
#include "valet/move.h"
#include "valet/state.h"

namespace valet {

// Playthroughs abort after this many decisions; reaching it means a rules
// bug.
inline constexpr int kSafetyCap = 100000;

struct DecisionPoint {
  int decision_index = 0;
  int seat = 0;
  std::vector<Move> legal;  // canonical order, never empty
};

struct GameResult {
  std::vector<int> scores;
  Objective objective = Objective::kHighScore;
};

struct DecisionEvent {
  int index = 0;
  int seat = 0;
  int num_legal = 0;
  int chosen = 0;  // canonical index of the chosen move
  std::string move;
  bool operator==(const DecisionEvent&) const = default;
};

struct CardMoveEvent {
  CardId card = 0;
  int from = 0;
  int to = 0;
  bool reference = false;
  bool operator==(const CardMoveEvent&) const = default;
};

struct ChanceEvent {
  std::string kind;
  bool operator==(const ChanceEvent&) const = default;
};

using Event = std::variant<DecisionEvent, CardMoveEvent, ChanceEvent>;

struct GameRecord {
  std::string game;
  std::uint64_t seed = 0;
  int players = 0;
  std::vector<Event> events;
  std::vector<int> scores;

  int NumDecisions() const;
  bool operator==(const GameRecord&) const = default;
};

// Legal moves of the seat to move, sorted canonically. Empty when terminal.
std::vector<Move> CanonicalLegalMoves(const GameState& state);
// Applies a move and appends it to the state's history. Does not validate.
void Advance(GameState& state, const Move& move);

// Asserts that play locations hold every deck card exactly once and that
// memory locations only reference cards. Throws ConsistencyError.
void CheckConservation(const GameState& state);

// A traced playthrough. Single owner; not thread-safe.
class Session {
 public:
  Session(std::shared_ptr<const Game> game, std::uint64_t seed);
  ~Session();
  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;

  const Game& game() const { return *game_; }
  std::shared_ptr<const Game> shared_game() const { return game_; }
  const GameState& state() const { return state_; }
  const GameRecord& record() const { return *record_; }
  int decisions() const { return decisions_; }

  bool IsTerminal() const { return state_.IsTerminal(); }
  std::variant<DecisionPoint, GameResult> Current() const;
  // Throws ArgumentError when the game is over.
  const DecisionPoint& Decision() const;
  GameResult Result() const;

  // Applies a legal move and returns the events it produced. Illegal moves
  // throw IllegalMoveError listing the legal set; the session is unchanged.
  std::vector<Event> Apply(const Move& move);
  std::vector<Event> ApplyIndex(int canonical_index);

 private:
  class Recorder;
  void Refresh();

  std::shared_ptr<const Game> game_;
  std::unique_ptr<GameRecord> record_;
  std::unique_ptr<Recorder> recorder_;
  GameState state_;
  DecisionPoint current_;
  int decisions_ = 0;
};

// Throws ConfigError for unknown games.
Session Start(std::string_view game_id, std::uint64_t seed);

// A seat's decision policy.
class Agent {
 public:
  virtual ~Agent() = default;
  // `state` is the ground truth; agents that play fair only look at
  // Observe(state, point.seat).
  virtual Move Choose(const GameState& state, const DecisionPoint& point) = 0;
};

// Plays to the end. `agents` must hold one agent per seat.
GameRecord Run(std::string_view game_id, std::uint64_t seed,
               std::span<Agent* const> agents);
GameRecord Run(std::shared_ptr<const Game> game, std::uint64_t seed,
               std::span<Agent* const> agents);

// Replays the record's decisions from its seed and returns the final state.
GameState Replay(const GameRecord& record);

// JSON Lines: header {game, seed, players}, one object per event with
// t = "decision" | "move" | "chance", trailer {scores}.
std::string RecordToJsonl(const GameRecord& record);
// Throws ParseError naming the offending line.
GameRecord RecordFromJsonl(std::string_view text);

}  // namespace valet

#endif  // VALET_ENGINE_H_
