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

#include "valet/state.h"

#include <algorithm>
#include <string>

#include "valet/errors.h"
#include "valet/rng.h"

namespace valet {

GameState::GameState(const Game& game)
    : game_(&game),
      capacity_(game.deck().size()),
      slots_(capacity_ * game.layout().size(), 0),
      sizes_(game.layout().size(), 0),
      vars_(game.num_vars(), 0),
      scores_(game.num_players(), 0) {}

GameState::GameState(const GameState& other)
    : game_(other.game_),
      capacity_(other.capacity_),
      slots_(other.slots_),
      sizes_(other.sizes_),
      vars_(other.vars_),
      scores_(other.scores_),
      history_(other.history_),
      to_move_(other.to_move_),
      chance_seed_(other.chance_seed_),
      sink_(nullptr) {}

GameState& GameState::operator=(const GameState& other) {
  if (this == &other) return *this;
  game_ = other.game_;
  capacity_ = other.capacity_;
  slots_ = other.slots_;
  sizes_ = other.sizes_;
  vars_ = other.vars_;
  scores_ = other.scores_;
  history_ = other.history_;
  to_move_ = other.to_move_;
  chance_seed_ = other.chance_seed_;
  sink_ = nullptr;
  return *this;
}

bool GameState::Contains(int loc, CardId card) const {
  auto cards = Cards(loc);
  return std::find(cards.begin(), cards.end(), card) != cards.end();
}

void GameState::Remove(CardId card, int loc) {
  CardId* begin = Begin(loc);
  CardId* end = begin + sizes_[loc];
  CardId* it = std::find(begin, end, card);
  if (it == end) {
    throw ConsistencyError("card " + CardText(this->card(card)) +
                           " is not in " + game_->layout()[loc].name);
  }
  std::copy(it + 1, end, it);
  --sizes_[loc];
}

void GameState::Push(CardId card, int loc) {
  if (sizes_[loc] >= capacity_) {
    throw ConsistencyError("location overflow: " + game_->layout()[loc].name);
  }
  Begin(loc)[sizes_[loc]++] = card;
}

void GameState::MoveCard(CardId card, int from, int to) {
  Remove(card, from);
  Push(card, to);
  if (sink_ != nullptr) sink_->OnCardMove(card, from, to, false);
}

void GameState::MoveTop(int from, int to) {
  if (sizes_[from] == 0) {
    throw ConsistencyError("move from empty " + game_->layout()[from].name);
  }
  CardId card = Top(from);
  --sizes_[from];
  Push(card, to);
  if (sink_ != nullptr) sink_->OnCardMove(card, from, to, false);
}

void GameState::MoveAll(int from, int to) {
  // Keeps the original order at the destination.
  const int n = sizes_[from];
  for (int i = 0; i < n; ++i) {
    CardId card = Begin(from)[i];
    Push(card, to);
    if (sink_ != nullptr) sink_->OnCardMove(card, from, to, false);
  }
  sizes_[from] = 0;
}

void GameState::Deal(int from, int to, int count) {
  for (int i = 0; i < count; ++i) MoveTop(from, to);
}

void GameState::Remember(CardId card, int from, int memory) {
  Push(card, memory);
  if (sink_ != nullptr) sink_->OnCardMove(card, from, memory, true);
}

void GameState::ClearMemory(int memory) { sizes_[memory] = 0; }

void GameState::Shuffle(int loc) {
  Rng rng(chance_seed_);
  chance_seed_ = MixSeed(chance_seed_);
  rng.Shuffle(std::span<CardId>(Begin(loc), sizes_[loc]));
  if (sink_ != nullptr) sink_->OnChance("shuffle");
}

void GameState::Chance(std::string_view kind) {
  if (sink_ != nullptr) sink_->OnChance(kind);
}

void GameState::SetCards(int loc, std::span<const CardId> cards) {
  if (cards.size() > capacity_) {
    throw ConsistencyError("location overflow: " + game_->layout()[loc].name);
  }
  std::copy(cards.begin(), cards.end(), Begin(loc));
  sizes_[loc] = static_cast<std::uint8_t>(cards.size());
}

}  // namespace valet
