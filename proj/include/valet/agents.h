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

#ifndef VALET_AGENTS_H_
#define VALET_AGENTS_H_

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valet/engine.h"
#include "valet/game.h"
#include "valet/observation.h"
#include "valet/rng.h"
#include "valet/state.h"

namespace valet {

struct MctsConfig {
  int determinizations = 10;
  // UCT iterations per legal move per determinization.
  int budget_multiplier = 100;
  double exploration = std::sqrt(2.0);
};

// Counters for checking the search budget.
struct MctsStats {
  std::int64_t decisions = 0;  // Choose calls
  std::int64_t searches = 0;   // decisions with more than one legal move
  std::int64_t determinizations = 0;
  std::int64_t iterations = 0;
  std::int64_t rollouts = 0;
};

// Maps a seat's score into [0, 1] following the game's objective: declared
// score bounds for High/LowScore, the {0, 1} score itself for
// OneWinner/OneLoser.
double Utility(const GameMetadata& metadata, int score);
std::vector<double> Utilities(const GameState& terminal);

// Uniform choice. Throws ArgumentError on an empty list.
Move RandomChoose(std::span<const Move> legal, Rng& rng);

// Multi-seat UCT on a perfect-information state: each tree node maximizes the
// utility of the seat that chose it, rollouts are uniformly random and
// unvisited children are expanded in canonical order. Returns the visit count
// of each canonical root move after exactly `budget` iterations.
std::vector<int> UctSearch(const GameState& root, int budget,
                           const MctsConfig& config, Rng& rng,
                           MctsStats* stats = nullptr);

// Determinized MCTS: sums root visits of independent UCT searches over
// states sampled from `obs`; ties go to the lowest canonical index.
// `legal` must be the canonical legal moves of the observer.
Move MctsChoose(const Game& game, const Observation& obs,
                std::span<const Move> legal, const MctsConfig& config,
                std::uint64_t seed, MctsStats* stats = nullptr);

class RandomAgent : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed) : rng_(seed) {}
  Move Choose(const GameState& state, const DecisionPoint& point) override;

 private:
  Rng rng_;
};

class MctsAgent : public Agent {
 public:
  MctsAgent(MctsConfig config, std::uint64_t seed)
      : config_(config), seed_(seed) {}
  // Only looks at the observation of the seat to move.
  Move Choose(const GameState& state, const DecisionPoint& point) override;
  const MctsStats& stats() const { return stats_; }

 private:
  MctsConfig config_;
  std::uint64_t seed_;
  std::int64_t calls_ = 0;
  MctsStats stats_;
};

// "random", "mcts" or "mcts(d=10,b=100,c=1.414)" with any subset of keys.
struct AgentSpec {
  enum class Kind { kRandom, kMcts };
  Kind kind = Kind::kRandom;
  MctsConfig mcts;
  std::string ToString() const;
};

// Throws ConfigError on malformed specs.
AgentSpec ParseAgentSpec(std::string_view text);
std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec, std::uint64_t seed);

}  // namespace valet

#endif  // VALET_AGENTS_H_
