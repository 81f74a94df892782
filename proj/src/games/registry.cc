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

#include "valet/registry.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "games/common.h"
#include "nlohmann/json.hpp"
#include "valet/errors.h"

namespace valet {
namespace {

using Factory = std::shared_ptr<const Game> (*)();

const std::map<std::string, Factory>& Factories() {
  static const auto* factories = new std::map<std::string, Factory>{
      {"agram", games::MakeAgram},
      {"blackjack", games::MakeBlackjack},
      {"crazy_eights", games::MakeCrazyEights},
      {"cribbage", games::MakeCribbage},
      {"cuckoo", games::MakeCuckoo},
      {"euchre", games::MakeEuchre},
      {"go_fish", games::MakeGoFish},
      {"golf6", games::MakeGolf6},
      {"goofspiel", games::MakeGoofspiel},
      {"hearts", games::MakeHearts},
      {"klaverjassen", games::MakeKlaverjassen},
      {"leduc", games::MakeLeduc},
      {"pitch", games::MakePitch},
      {"president", games::MakePresident},
      {"rummy", games::MakeRummy},
      {"scarto", games::MakeScarto},
      {"schwimmen", games::MakeSchwimmen},
      {"scopa", games::MakeScopa},
      {"skitgubbe", games::MakeSkitgubbe},
      {"sueca", games::MakeSueca},
      {"whist", games::MakeWhist},
  };
  return *factories;
}

// Games are immutable, so one instance per id is shared by every caller.
const std::map<std::string, std::shared_ptr<const Game>>& Instances() {
  static const auto* instances = [] {
    auto* out = new std::map<std::string, std::shared_ptr<const Game>>;
    for (const auto& [id, make] : Factories()) (*out)[id] = make();
    return out;
  }();
  return *instances;
}

std::string Normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

}  // namespace

const std::vector<GameMetadata>& Registry() {
  static const auto* registry = [] {
    auto* out = new std::vector<GameMetadata>;
    for (const auto& [id, game] : Instances()) out->push_back(game->metadata());
    return out;
  }();
  return *registry;
}

std::vector<std::string> GameIds() {
  std::vector<std::string> ids;
  for (const auto& [id, make] : Factories()) ids.push_back(id);
  return ids;
}

std::shared_ptr<const Game> LookupGame(std::string_view name) {
  const std::string key = Normalize(name);
  for (const auto& [id, game] : Instances()) {
    if (Normalize(id) == key || Normalize(game->metadata().name) == key) {
      return game;
    }
  }
  std::string valid;
  for (const auto& [id, make] : Factories()) {
    if (!valid.empty()) valid += ", ";
    valid += id;
  }
  throw ConfigError("unknown game '" + std::string(name) +
                    "'; valid games: " + valid);
}

std::string MetadataJson() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const GameMetadata& m : Registry()) {
    nlohmann::ordered_json entry;
    entry["id"] = m.id;
    entry["name"] = m.name;
    entry["genre"] = m.genre;
    entry["origin"] = m.origin;
    entry["year"] = m.year ? nlohmann::ordered_json(*m.year) : nlohmann::ordered_json();
    entry["players"] = m.players;
    entry["deck_family"] = m.deck_family;
    entry["deck"] = std::string(DeckSpecName(m.deck));
    entry["deck_size"] = BuildDeck(m.deck).size();
    entry["scoring"] = std::string(ObjectiveName(m.scoring));
    entry["info_labels"] = m.info.ToString();
    entry["tricks"] = m.tricks;
    entry["sets"] = m.sets;
    entry["teams"] = m.teams;
    entry["score_bounds"] = {m.score_min, m.score_max};
    entry["team_of_seat"] = m.team_of_seat;
    out.push_back(std::move(entry));
  }
  return out.dump(2);
}

}  // namespace valet
