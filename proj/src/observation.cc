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

#include "valet/observation.h"

#include <algorithm>
#include <string>

#include "valet/errors.h"

namespace valet {

bool SeesContents(Visibility visibility, int owner, int seat) {
  switch (visibility) {
    case Visibility::kPublic: return true;
    case Visibility::kPrivate: return owner == seat;
    case Visibility::kHidden: return false;
  }
  return false;
}

Observation Observe(const GameState& state, int seat) {
  const Game& game = state.game();
  if (seat < 0 || seat >= game.num_players()) {
    throw ArgumentError("invalid seat " + std::to_string(seat) + " for " +
                        game.metadata().id);
  }
  Observation obs;
  obs.observer = seat;
  obs.to_move = state.ToMove();
  obs.views.reserve(game.num_locations());
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    const LocationInfo& info = game.layout()[loc];
    auto cards = state.Cards(loc);
    LocationView view;
    view.count = static_cast<int>(cards.size());
    if (SeesContents(info.visibility, info.owner, seat)) {
      view.full = true;
      view.cards.assign(cards.begin(), cards.end());
    } else {
      view.backs.reserve(cards.size());
      for (CardId c : cards) view.backs.push_back(game.card(c).back);
      std::sort(view.backs.begin(), view.backs.end());
    }
    obs.views.push_back(std::move(view));
  }
  obs.variables.assign(state.Vars().begin(), state.Vars().end());
  obs.scores.assign(state.Scores().begin(), state.Scores().end());
  obs.public_log.reserve(state.History().size());
  for (const Announcement& a : state.History()) {
    if (game.IsPublicMove(a.move)) {
      obs.public_log.push_back({a.seat, false, a.move});
    } else {
      obs.public_log.push_back({a.seat, true, Move{}});
    }
  }
  return obs;
}

}  // namespace valet
