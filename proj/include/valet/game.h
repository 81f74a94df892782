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

#ifndef VALET_GAME_H_
#define VALET_GAME_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valet/card.h"
#include "valet/location.h"
#include "valet/move.h"

namespace valet {

class GameState;
class EventSink;

enum class Objective { kHighScore, kLowScore, kOneWinner, kOneLoser };

std::string_view ObjectiveName(Objective objective);

// Information mechanisms of a game: Private, Taken, Shared, Deduction, Backs.
class InfoLabels {
 public:
  enum Label : unsigned {
    kPrivate = 1u << 0,
    kTaken = 1u << 1,
    kShared = 1u << 2,
    kDeduction = 1u << 3,
    kBacks = 1u << 4,
  };

  InfoLabels() = default;
  explicit InfoLabels(unsigned bits) : bits_(bits) {}

  bool Has(Label label) const { return (bits_ & label) != 0; }
  void Add(Label label) { bits_ |= label; }
  unsigned bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }

  // Letters in the order P, T, S, D, B joined by ", " ("" when empty).
  std::string ToString() const;
  // Accepts "P, D", "PD", "p,t" ...; throws ParseError on unknown letters.
  static InfoLabels Parse(std::string_view text);

  bool operator==(const InfoLabels&) const = default;

 private:
  unsigned bits_ = 0;
};

struct GameMetadata {
  std::string id;    // registry key, e.g. "crazy_eights"
  std::string name;  // display name, e.g. "Crazy Eights"
  std::string genre;
  std::string origin;
  std::optional<int> year;  // nullopt when unknown
  int players = 0;
  std::string deck_family;  // "French", "Piquet", "Unique", ...
  DeckSpec deck = DeckSpec::kFrench52;
  Objective scoring = Objective::kHighScore;
  InfoLabels info;
  bool tricks = false;
  bool sets = false;
  bool teams = false;
  // Theoretical per-seat score range of one playthrough.
  int score_min = 0;
  int score_max = 0;
  // team_of_seat[s] is the partnership of seat s; empty without teams.
  std::vector<int> team_of_seat;
};

// Immutable rule set. All mutation happens on GameState values; a Game may be
// shared freely across threads.
//
// Location 0 of every game is the pile that receives the full deck before
// Setup runs.
class Game {
 public:
  explicit Game(GameMetadata metadata);
  virtual ~Game() = default;

  Game(const Game&) = delete;
  Game& operator=(const Game&) = delete;

  const GameMetadata& metadata() const { return metadata_; }
  int num_players() const { return metadata_.players; }
  const std::vector<Card>& deck() const { return deck_; }
  const Card& card(CardId id) const { return deck_[id]; }
  const std::vector<LocationInfo>& layout() const { return layout_; }
  int num_locations() const { return static_cast<int>(layout_.size()); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  int num_vars() const { return static_cast<int>(var_names_.size()); }

  // Shuffles and deals with the given seed. Card movements and chance
  // events are reported to `sink` when non-null.
  GameState NewInitialState(std::uint64_t seed,
                            EventSink* sink = nullptr) const;

  // Appends the legal moves of the seat to move, in a deterministic order
  // that is not necessarily canonical.
  virtual void LegalMoves(const GameState& state,
                          std::vector<Move>& out) const = 0;
  // Applies a legal move. Does not validate.
  virtual void ApplyMove(GameState& state, const Move& move) const = 0;
  virtual std::string MoveText(const Move& move) const = 0;
  // Whether other seats learn the move itself (Goofspiel bids are secret).
  virtual bool IsPublicMove(const Move& /*move*/) const { return true; }

 protected:
  // Deals the opening position and sets the first seat to move.
  virtual void Setup(GameState& state) const = 0;

  int AddLocation(std::string name, int owner, Visibility visibility);
  int AddMemory(std::string name, int owner, Visibility visibility);
  int AddVar(std::string name);
  // Replaces the deck (used by test games with custom card sets).
  void SetDeck(std::vector<Card> deck) { deck_ = std::move(deck); }

 private:
  GameMetadata metadata_;
  std::vector<Card> deck_;
  std::vector<LocationInfo> layout_;
  std::vector<std::string> var_names_;
};

}  // namespace valet

#endif  // VALET_GAME_H_
