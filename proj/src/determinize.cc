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

#include "valet/determinize.h"

#include <map>
#include <string>

#include "valet/errors.h"

namespace valet {

int UnknownPool::NumSlots() const {
  int n = 0;
  for (const Slot& s : slots) n += static_cast<int>(s.backs.size());
  return n;
}

UnknownPool BuildPool(const Game& game, const Observation& obs) {
  if (static_cast<int>(obs.views.size()) != game.num_locations()) {
    throw ConsistencyError("observation does not match the layout of " +
                           game.metadata().id);
  }
  std::vector<bool> placed(game.deck().size(), false);
  UnknownPool pool;
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    if (game.layout()[loc].klass != LocationClass::kPlay) continue;
    const LocationView& view = obs.views[loc];
    if (view.full) {
      for (CardId c : view.cards) placed[c] = true;
    } else if (view.count > 0) {
      pool.slots.push_back({loc, view.backs});
    }
  }
  for (std::size_t c = 0; c < placed.size(); ++c) {
    if (!placed[c]) pool.cards.push_back(static_cast<CardId>(c));
  }
  std::map<int, int> balance;
  for (CardId c : pool.cards) ++balance[game.card(c).back];
  for (const auto& slot : pool.slots) {
    for (std::uint8_t b : slot.backs) --balance[b];
  }
  for (const auto& [back, diff] : balance) {
    if (diff != 0) {
      throw ConsistencyError(game.metadata().id + ": " +
                             std::to_string(diff) +
                             " unplaced cards with back " +
                             std::to_string(back));
    }
  }
  return pool;
}

GameState Determinize(const Game& game, const Observation& obs, Rng& rng) {
  UnknownPool pool = BuildPool(game, obs);
  std::map<int, std::vector<CardId>> by_back;
  for (CardId c : pool.cards) by_back[game.card(c).back].push_back(c);
  for (auto& [back, cards] : by_back) rng.Shuffle(std::span<CardId>(cards));
  std::map<int, std::size_t> next;

  GameState state(game);
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    const LocationView& view = obs.views[loc];
    if (view.full) state.SetCards(loc, view.cards);
  }
  std::vector<CardId> cards;
  for (const auto& slot : pool.slots) {
    cards.clear();
    for (std::uint8_t b : slot.backs) cards.push_back(by_back[b][next[b]++]);
    state.SetCards(slot.location, cards);
  }
  // Another seat's private memory: any references with the right backs.
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    const LocationView& view = obs.views[loc];
    if (game.layout()[loc].klass != LocationClass::kMemory || view.full) {
      continue;
    }
    cards.clear();
    for (std::uint8_t b : view.backs) {
      std::vector<CardId> candidates;
      for (const Card& c : game.deck()) {
        if (c.back == b) candidates.push_back(c.id);
      }
      cards.push_back(candidates[rng.Below(candidates.size())]);
    }
    state.SetCards(loc, cards);
  }
  for (int v = 0; v < game.num_vars(); ++v) state.SetVar(v, obs.variables[v]);
  for (int p = 0; p < game.num_players(); ++p) state.SetScore(p, obs.scores[p]);
  for (const LogEntry& e : obs.public_log) state.AppendHistory(e.seat, e.move);
  state.SetToMove(obs.to_move);
  state.set_chance_seed(rng.Next());
  return state;
}

}  // namespace valet
