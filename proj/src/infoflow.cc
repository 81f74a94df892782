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

#include "valet/infoflow.h"

#include <map>
#include <utility>

#include "nlohmann/json.hpp"
#include "valet/errors.h"
#include "valet/registry.h"

namespace valet {

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kNormal: return "normal";
    case EdgeKind::kTaken: return "taken";
    case EdgeKind::kShared: return "shared";
  }
  return "?";
}

EdgeKind ClassifyMove(const LocationInfo& from, const LocationInfo& to) {
  if (from.klass == LocationClass::kMemory || to.klass == LocationClass::kMemory) {
    return EdgeKind::kNormal;
  }
  const bool to_unseen = to.visibility == Visibility::kPrivate ||
                         to.visibility == Visibility::kHidden;
  if (from.visibility == Visibility::kPublic && to_unseen) {
    return EdgeKind::kTaken;
  }
  if (from.visibility == Visibility::kPrivate && to_unseen &&
      to.owner != from.owner) {
    return EdgeKind::kShared;
  }
  return EdgeKind::kNormal;
}

FlowGraph BuildGraph(const Game& game, std::span<const GameRecord> records) {
  FlowGraph graph;
  graph.game = game.metadata().id;
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    const LocationInfo& info = game.layout()[loc];
    graph.nodes.push_back(
        {loc, info.name, info.owner, info.klass, info.visibility, false, false});
  }
  // The full deck starts in location 0.
  if (!graph.nodes.empty() && !records.empty()) {
    graph.nodes[0].ever_held = true;
    for (const Card& c : game.deck()) {
      if (c.back != 0) graph.nodes[0].distinct_backs = true;
    }
  }
  std::map<std::pair<int, int>, int> counts;
  for (const GameRecord& record : records) {
    if (record.game != graph.game) {
      throw ArgumentError("records from different games: " + graph.game +
                          " and " + record.game);
    }
    for (const Event& e : record.events) {
      const auto* m = std::get_if<CardMoveEvent>(&e);
      if (m == nullptr) continue;
      if (m->from < 0 || m->to < 0 || m->from >= game.num_locations() ||
          m->to >= game.num_locations() || m->card >= game.deck().size()) {
        throw ArgumentError("record event out of range for " + graph.game);
      }
      ++counts[{m->from, m->to}];
      FlowNode& dest = graph.nodes[m->to];
      dest.ever_held = true;
      if (game.card(m->card).back != 0) dest.distinct_backs = true;
    }
  }
  for (const auto& [key, count] : counts) {
    graph.edges.push_back({key.first, key.second,
                           ClassifyMove(game.layout()[key.first],
                                        game.layout()[key.second]),
                           count});
  }
  return graph;
}

FlowGraph BuildGraph(std::span<const GameRecord> records) {
  if (records.empty()) return FlowGraph{};
  return BuildGraph(*LookupGame(records.front().game), records);
}

InfoLabels Classify(const FlowGraph& graph, const GameMetadata& metadata) {
  InfoLabels labels;
  for (const FlowNode& n : graph.nodes) {
    if (n.klass == LocationClass::kPlay &&
        n.visibility == Visibility::kPrivate && n.ever_held) {
      labels.Add(InfoLabels::kPrivate);
    }
  }
  for (const FlowEdge& e : graph.edges) {
    if (e.kind == EdgeKind::kTaken) labels.Add(InfoLabels::kTaken);
    if (e.kind == EdgeKind::kShared) labels.Add(InfoLabels::kShared);
  }
  int backs = 0;
  std::vector<bool> seen(256, false);
  for (const Card& c : BuildDeck(metadata.deck)) {
    if (!seen[c.back]) ++backs;
    seen[c.back] = true;
  }
  if (backs > 1) labels.Add(InfoLabels::kBacks);
  if (metadata.info.Has(InfoLabels::kDeduction)) {
    labels.Add(InfoLabels::kDeduction);
  }
  return labels;
}

std::string ToDot(const FlowGraph& graph) {
  std::string out = "digraph \"" + graph.game + "\" {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box, style=filled, fontname=\"Helvetica\"];\n";
  for (const FlowNode& n : graph.nodes) {
    std::string_view color;
    if (n.klass == LocationClass::kMemory) {
      color = kMemoryColor;
    } else if (n.visibility == Visibility::kPublic) {
      color = kPublicColor;
    } else if (n.visibility == Visibility::kPrivate) {
      color = kPrivateColor;
    } else {
      color = kHiddenColor;
    }
    out += "  n" + std::to_string(n.location) + " [label=\"" + n.name +
           "\", fillcolor=\"" + std::string(color) + "\"";
    if (n.distinct_backs) out += ", style=\"filled,bold\", penwidth=3";
    out += "];\n";
  }
  for (const FlowEdge& e : graph.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + std::to_string(e.count) + "\"";
    if (e.kind == EdgeKind::kTaken) {
      out += ", color=\"" + std::string(kTakenColor) + "\", style=dotted";
    } else if (e.kind == EdgeKind::kShared) {
      out += ", color=\"" + std::string(kSharedColor) + "\", style=dashed";
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string ToJson(const FlowGraph& graph) {
  nlohmann::ordered_json j;
  j["game"] = graph.game;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const FlowNode& n : graph.nodes) {
    j["nodes"].push_back(
        {{"loc_id", n.location},
         {"name", n.name},
         {"owner", n.owner},
         {"class", n.klass == LocationClass::kMemory ? "memory" : "play"},
         {"visibility", std::string(VisibilityName(n.visibility))},
         {"distinct_backs", n.distinct_backs}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const FlowEdge& e : graph.edges) {
    j["edges"].push_back({{"from_loc", e.from},
                          {"to_loc", e.to},
                          {"kind", std::string(EdgeKindName(e.kind))},
                          {"count", e.count}});
  }
  return j.dump(2) + "\n";
}

}  // namespace valet
