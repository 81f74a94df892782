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

#ifndef VALET_REGISTRY_H_
#define VALET_REGISTRY_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "valet/game.h"

namespace valet {

// Metadata of every registered game in stable (alphabetical) order.
const std::vector<GameMetadata>& Registry();

// Case-insensitive; ignores spaces, dashes, apostrophes and underscores, so
// "Go Fish", "go-fish" and "GO_FISH" all resolve. Throws ConfigError listing
// the valid names.
std::shared_ptr<const Game> LookupGame(std::string_view name);

std::vector<std::string> GameIds();

// Registry metadata as a JSON array (the games.json export).
std::string MetadataJson();

}  // namespace valet

#endif  // VALET_REGISTRY_H_
