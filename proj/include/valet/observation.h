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

#ifndef VALET_OBSERVATION_H_
#define VALET_OBSERVATION_H_

#include <cstdint>
#include <vector>

#include "valet/card.h"
#include "valet/move.h"
#include "valet/state.h"

namespace valet {

// What one seat sees of one location. A full view lists the card ids in
// order; a count view only gives the number of cards and the multiset of
// their back tags (sorted ascending).
struct LocationView {
  bool full = false;
  std::vector<CardId> cards;
  int count = 0;
  std::vector<std::uint8_t> backs;

  bool operator==(const LocationView&) const = default;
};

struct LogEntry {
  int seat = 0;
  bool secret = false;
  Move move;  // zero when secret
  bool operator==(const LogEntry&) const = default;
};

struct Observation {
  int observer = 0;
  int to_move = kTerminal;
  // One entry per location in layout order (memory locations included).
  std::vector<LocationView> views;
  std::vector<int> variables;
  std::vector<int> scores;
  std::vector<LogEntry> public_log;

  bool operator==(const Observation&) const = default;
};

// Whether `seat` sees the contents of a location with this visibility and
// owner.
bool SeesContents(Visibility visibility, int owner, int seat);

// Throws ArgumentError for an invalid seat.
Observation Observe(const GameState& state, int seat);

}  // namespace valet

#endif  // VALET_OBSERVATION_H_
