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

#include "valet/game.h"

#include <cctype>
#include <string>

#include "valet/errors.h"
#include "valet/rng.h"
#include "valet/state.h"

namespace valet {

std::string_view ObjectiveName(Objective objective) {
  switch (objective) {
    case Objective::kHighScore: return "HighScore";
    case Objective::kLowScore: return "LowScore";
    case Objective::kOneWinner: return "OneWinner";
    case Objective::kOneLoser: return "OneLoser";
  }
  return "?";
}

std::string_view VisibilityName(Visibility v) {
  switch (v) {
    case Visibility::kPublic: return "public";
    case Visibility::kHidden: return "hidden";
    case Visibility::kPrivate: return "private";
  }
  return "?";
}

std::string InfoLabels::ToString() const {
  static constexpr std::pair<Label, char> kOrder[] = {
      {kPrivate, 'P'}, {kTaken, 'T'}, {kShared, 'S'}, {kDeduction, 'D'},
      {kBacks, 'B'}};
  std::string out;
  for (auto [label, letter] : kOrder) {
    if (!Has(label)) continue;
    if (!out.empty()) out += ", ";
    out += letter;
  }
  return out;
}

InfoLabels InfoLabels::Parse(std::string_view text) {
  InfoLabels labels;
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'P': labels.Add(kPrivate); break;
      case 'T': labels.Add(kTaken); break;
      case 'S': labels.Add(kShared); break;
      case 'D': labels.Add(kDeduction); break;
      case 'B': labels.Add(kBacks); break;
      case ',':
      case ' ': break;
      default:
        throw ParseError("unknown information label in '" +
                         std::string(text) + "'");
    }
  }
  return labels;
}

Game::Game(GameMetadata metadata)
    : metadata_(std::move(metadata)), deck_(BuildDeck(metadata_.deck)) {}

int Game::AddLocation(std::string name, int owner, Visibility visibility) {
  layout_.push_back(
      LocationInfo{std::move(name), owner, LocationClass::kPlay, visibility});
  return static_cast<int>(layout_.size()) - 1;
}

int Game::AddMemory(std::string name, int owner, Visibility visibility) {
  if (visibility == Visibility::kHidden) {
    throw ConfigError("memory locations must be public or private");
  }
  layout_.push_back(
      LocationInfo{std::move(name), owner, LocationClass::kMemory, visibility});
  return static_cast<int>(layout_.size()) - 1;
}

int Game::AddVar(std::string name) {
  var_names_.push_back(std::move(name));
  return static_cast<int>(var_names_.size()) - 1;
}

GameState Game::NewInitialState(std::uint64_t seed, EventSink* sink) const {
  GameState state(*this);
  state.set_chance_seed(DeriveSeed(seed, "chance"));
  std::vector<CardId> all(deck_.size());
  for (std::size_t i = 0; i < deck_.size(); ++i) {
    all[i] = static_cast<CardId>(i);
  }
  state.SetCards(0, all);
  state.AttachSink(sink);
  Setup(state);
  return state;
}

}  // namespace valet
