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

#include "support.h"

#include <algorithm>
#include <memory>
#include <string>

#include "valet/agents.h"
#include "valet/errors.h"
#include "valet/observation.h"
#include "valet/registry.h"
#include "valet/rng.h"

namespace valet::testing {

const std::vector<ReferenceRow>& ReferenceTable() {
  static const std::vector<ReferenceRow> kRows = {
      {"agram", 3, "P, D", true, false, false},
      {"blackjack", 1, "", false, false, false},
      {"crazy_eights", 3, "P", false, false, false},
      {"cribbage", 2, "P, T, S, D", false, true, false},
      {"cuckoo", 6, "P, S, D", false, false, false},
      {"euchre", 4, "P, T, S, D", true, false, true},
      {"go_fish", 4, "P, T, D", false, true, false},
      {"golf6", 4, "P", false, false, false},
      {"goofspiel", 2, "P, B", false, false, false},
      {"hearts", 4, "P, D", true, false, false},
      {"klaverjassen", 4, "P, D", true, true, true},
      {"leduc", 2, "P", false, false, false},
      {"pitch", 4, "P, D", true, false, true},
      {"president", 5, "P", false, true, false},
      {"rummy", 2, "P, T", false, true, false},
      {"scarto", 3, "P, D", true, false, false},
      {"schwimmen", 5, "P, T, S", false, true, false},
      {"scopa", 2, "P", false, false, false},
      {"skitgubbe", 3, "P, D", false, false, false},
      {"sueca", 4, "P, D", true, false, true},
      {"whist", 4, "P, D", true, false, true},
  };
  return kRows;
}

void CheckObservationSound(const GameState& state) {
  const Game& game = state.game();
  for (int seat = 0; seat < game.num_players(); ++seat) {
    const Observation obs = Observe(state, seat);
    const auto fail = [&](int loc, const std::string& what) {
      throw ConsistencyError(game.metadata().id + ": seat " +
                             std::to_string(seat) + " location " +
                             game.layout()[loc].name + ": " + what);
    };
    if (static_cast<int>(obs.views.size()) != game.num_locations()) {
      throw ConsistencyError(game.metadata().id + ": view count mismatch");
    }
    for (int loc = 0; loc < game.num_locations(); ++loc) {
      const LocationInfo& info = game.layout()[loc];
      const LocationView& view = obs.views[loc];
      const auto truth = state.Cards(loc);
      if (view.full != SeesContents(info.visibility, info.owner, seat)) {
        fail(loc, "wrong view kind");
      }
      if (view.full) {
        if (!std::equal(truth.begin(), truth.end(), view.cards.begin(),
                        view.cards.end())) {
          fail(loc, "full view differs from contents");
        }
        continue;
      }
      if (view.count != static_cast<int>(truth.size())) {
        fail(loc, "count view differs from size");
      }
      std::vector<std::uint8_t> backs;
      for (CardId c : truth) backs.push_back(state.card(c).back);
      std::sort(backs.begin(), backs.end());
      if (backs != view.backs) fail(loc, "count view backs differ");
    }
  }
}

GameRecord PlayRandomChecked(std::string_view game_id, std::uint64_t seed,
                             const StateHook& hook) {
  const auto game = LookupGame(game_id);
  std::vector<RandomAgent> agents;
  for (int p = 0; p < game->num_players(); ++p) {
    agents.emplace_back(DeriveSeed(seed, "agent", p));
  }
  Session session(game, seed);
  while (!session.IsTerminal()) {
    CheckConservation(session.state());
    CheckObservationSound(session.state());
    const DecisionPoint& point = session.Decision();
    if (hook) hook(session.state(), point);
    const Move move = agents[point.seat].Choose(session.state(), point);
    session.Apply(move);  // throws SafetyCapError past the cap
  }
  CheckConservation(session.state());
  CheckObservationSound(session.state());
  return session.record();
}

int LocationByName(const Game& game, std::string_view name) {
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    if (game.layout()[loc].name == name) return loc;
  }
  throw ArgumentError(game.metadata().id + " has no location " +
                      std::string(name));
}

}  // namespace valet::testing
