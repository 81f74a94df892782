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

#ifndef VALET_INFOFLOW_H_
#define VALET_INFOFLOW_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valet/engine.h"
#include "valet/game.h"
#include "valet/location.h"

namespace valet {

enum class EdgeKind { kNormal, kTaken, kShared };
std::string_view EdgeKindName(EdgeKind kind);

// Card movement between two locations: taken when a public card leaves view,
// shared when a private card reaches another owner. Memory locations are
// always normal.
EdgeKind ClassifyMove(const LocationInfo& from, const LocationInfo& to);

struct FlowNode {
  int location = 0;
  std::string name;
  int owner = kTableOwner;
  LocationClass klass = LocationClass::kPlay;
  Visibility visibility = Visibility::kHidden;
  bool distinct_backs = false;  // ever held a card with a non-default back
  bool ever_held = false;
};

struct FlowEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::kNormal;
  int count = 0;
};

struct FlowGraph {
  std::string game;
  std::vector<FlowNode> nodes;  // one per location
  std::vector<FlowEdge> edges;  // sorted by (from, to)
};

// Union of the card movements of records from one game. Throws
// ArgumentError for mixed games and ConfigError for unknown ones.
FlowGraph BuildGraph(std::span<const GameRecord> records);
FlowGraph BuildGraph(const Game& game, std::span<const GameRecord> records);

// P, T, S and B from movement; D copied from the metadata.
InfoLabels Classify(const FlowGraph& graph, const GameMetadata& metadata);

inline constexpr std::string_view kPublicColor = "#8fd19e";
inline constexpr std::string_view kHiddenColor = "#f6e58d";
inline constexpr std::string_view kPrivateColor = "#7fb3e6";
inline constexpr std::string_view kMemoryColor = "#d9d9d9";
inline constexpr std::string_view kTakenColor = "#d62728";
inline constexpr std::string_view kSharedColor = "#1f4e9c";

std::string ToDot(const FlowGraph& graph);
std::string ToJson(const FlowGraph& graph);

}  // namespace valet

#endif  // VALET_INFOFLOW_H_
