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

#ifndef VALET_DETERMINIZE_H_
#define VALET_DETERMINIZE_H_

#include <cstdint>
#include <vector>

#include "valet/card.h"
#include "valet/game.h"
#include "valet/observation.h"
#include "valet/rng.h"
#include "valet/state.h"

namespace valet {

// Cards an observer cannot place, and the slots they must fill.
struct UnknownPool {
  std::vector<CardId> cards;
  struct Slot {
    int location = 0;
    std::vector<std::uint8_t> backs;  // one entry per card, sorted
  };
  std::vector<Slot> slots;
  int NumSlots() const;
};

// Throws ConsistencyError when the slot counts or back tags do not match the
// unseen cards.
UnknownPool BuildPool(const Game& game, const Observation& obs);

// Samples a full state consistent with what `obs.observer` sees. Unknown
// cards are dealt uniformly at random within each back tag; the action
// history is not used to rule out deals.
GameState Determinize(const Game& game, const Observation& obs, Rng& rng);

}  // namespace valet

#endif  // VALET_DETERMINIZE_H_
