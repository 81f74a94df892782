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

#ifndef VALET_TESTS_SUPPORT_H_
#define VALET_TESTS_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "valet/engine.h"
#include "valet/state.h"

namespace valet::testing {

// Expected table row of each game: players, information labels and
// mechanics.
struct ReferenceRow {
  std::string_view id;
  int players;
  std::string_view info;  // "P, T, S, D, B" style
  bool tricks;
  bool sets;
  bool teams;
};
const std::vector<ReferenceRow>& ReferenceTable();

// Every seat's observation agrees with the ground truth: full views list the
// exact cards, count views give the true count and back multiset, and full
// views appear exactly where the seat may look. Throws ConsistencyError.
void CheckObservationSound(const GameState& state);

// Called before every decision with the state and the decision point.
using StateHook = std::function<void(const GameState&, const DecisionPoint&)>;

// Plays one game with the same agents and seeds as the harness's random
// condition, asserting conservation and observation soundness at every
// state. Returns the record.
GameRecord PlayRandomChecked(std::string_view game, std::uint64_t seed,
                             const StateHook& hook = nullptr);

// Location index by name; throws ArgumentError when missing.
int LocationByName(const Game& game, std::string_view name);

}  // namespace valet::testing

#endif  // VALET_TESTS_SUPPORT_H_
