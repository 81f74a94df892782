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

#include "valet/agents.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

#include "valet/determinize.h"
#include "valet/errors.h"

namespace valet {

double Utility(const GameMetadata& metadata, int score) {
  switch (metadata.scoring) {
    case Objective::kOneWinner:
    case Objective::kOneLoser:
      return score;
    case Objective::kHighScore:
    case Objective::kLowScore: {
      const double span = metadata.score_max - metadata.score_min;
      double u = span > 0 ? (score - metadata.score_min) / span : 0.5;
      return metadata.scoring == Objective::kHighScore ? u : 1.0 - u;
    }
  }
  return 0.0;
}

std::vector<double> Utilities(const GameState& terminal) {
  const GameMetadata& m = terminal.game().metadata();
  std::vector<double> out(m.players);
  for (int p = 0; p < m.players; ++p) out[p] = Utility(m, terminal.Score(p));
  return out;
}

Move RandomChoose(std::span<const Move> legal, Rng& rng) {
  if (legal.empty()) throw ArgumentError("no legal moves to choose from");
  return legal[rng.Below(legal.size())];
}

namespace {

struct Node {
  int seat = 0;  // seat that chose the move leading here
  Move move;
  int visits = 0;
  double total = 0.0;
  bool initialized = false;
  std::vector<Move> untried;  // canonical order, consumed from the front
  std::size_t next_untried = 0;
  std::vector<int> children;
};

class Tree {
 public:
  Tree(const MctsConfig& config, Rng& rng) : config_(config), rng_(rng) {}

  std::vector<int> Search(const GameState& root, int budget,
                          MctsStats* stats) {
    nodes_.clear();
    nodes_.emplace_back();
    Init(0, root);
    const Game& game = root.game();
    std::vector<int> path;
    std::vector<Move> moves;
    for (int it = 0; it < budget; ++it) {
      GameState state = root;
      path.assign(1, 0);
      int node = 0;
      // Selection and expansion.
      while (!state.IsTerminal()) {
        if (!nodes_[node].initialized) Init(node, state);
        Node& n = nodes_[node];
        if (n.next_untried < n.untried.size()) {
          const Move move = n.untried[n.next_untried++];
          const int child = static_cast<int>(nodes_.size());
          Node fresh;
          fresh.seat = state.ToMove();
          fresh.move = move;
          nodes_.push_back(std::move(fresh));
          nodes_[node].children.push_back(child);
          game.ApplyMove(state, move);
          path.push_back(child);
          break;
        }
        node = Select(node);
        game.ApplyMove(state, nodes_[node].move);
        path.push_back(node);
      }
      // Rollout.
      while (!state.IsTerminal()) {
        moves.clear();
        game.LegalMoves(state, moves);
        game.ApplyMove(state, moves[rng_.Below(moves.size())]);
      }
      const std::vector<double> utility = Utilities(state);
      for (int id : path) {
        Node& n = nodes_[id];
        ++n.visits;
        if (id != 0) n.total += utility[n.seat];
      }
      if (stats != nullptr) {
        ++stats->iterations;
        ++stats->rollouts;
      }
    }
    const Node& root_node = nodes_[0];
    std::vector<int> visits(root_node.untried.size(), 0);
    for (std::size_t i = 0; i < root_node.children.size(); ++i) {
      visits[i] = nodes_[root_node.children[i]].visits;
    }
    return visits;
  }

 private:
  void Init(int node, const GameState& state) {
    Node& n = nodes_[node];
    n.untried.clear();
    state.game().LegalMoves(state, n.untried);
    std::sort(n.untried.begin(), n.untried.end());
    n.initialized = true;
  }

  int Select(int node) const {
    const Node& n = nodes_[node];
    const double log_n = std::log(static_cast<double>(n.visits));
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int child : n.children) {
      const Node& c = nodes_[child];
      const double value = c.total / c.visits +
                           config_.exploration * std::sqrt(log_n / c.visits);
      if (value > best_value) {
        best_value = value;
        best = child;
      }
    }
    return best;
  }

  const MctsConfig& config_;
  Rng& rng_;
  std::vector<Node> nodes_;
};

}  // namespace

std::vector<int> UctSearch(const GameState& root, int budget,
                           const MctsConfig& config, Rng& rng,
                           MctsStats* stats) {
  if (root.IsTerminal()) throw ArgumentError("search from a terminal state");
  Tree tree(config, rng);
  return tree.Search(root, budget, stats);
}

Move MctsChoose(const Game& game, const Observation& obs,
                std::span<const Move> legal, const MctsConfig& config,
                std::uint64_t seed, MctsStats* stats) {
  if (legal.empty()) throw ArgumentError("no legal moves to choose from");
  if (config.determinizations < 1 || config.budget_multiplier < 1) {
    throw ConfigError("MCTS needs at least one determinization and budget 1");
  }
  if (stats != nullptr) ++stats->decisions;
  if (legal.size() == 1) return legal[0];
  if (stats != nullptr) ++stats->searches;
  const int budget = config.budget_multiplier * static_cast<int>(legal.size());
  std::vector<std::int64_t> visits(legal.size(), 0);
  for (int d = 0; d < config.determinizations; ++d) {
    Rng rng(DeriveSeed(seed, "determinization", d));
    GameState root = Determinize(game, obs, rng);
    if (stats != nullptr) ++stats->determinizations;
    std::vector<Move> root_moves = CanonicalLegalMoves(root);
    std::vector<int> counts = UctSearch(root, budget, config, rng, stats);
    for (std::size_t i = 0; i < root_moves.size(); ++i) {
      auto it = std::find(legal.begin(), legal.end(), root_moves[i]);
      if (it != legal.end()) visits[it - legal.begin()] += counts[i];
    }
  }
  // max_element returns the first maximum: the lowest canonical index.
  return legal[std::max_element(visits.begin(), visits.end()) -
               visits.begin()];
}

Move RandomAgent::Choose(const GameState& /*state*/,
                         const DecisionPoint& point) {
  return RandomChoose(point.legal, rng_);
}

Move MctsAgent::Choose(const GameState& state, const DecisionPoint& point) {
  const std::uint64_t seed = DeriveSeed(seed_, "decision", calls_++);
  return MctsChoose(state.game(), Observe(state, point.seat), point.legal,
                    config_, seed, &stats_);
}

std::string AgentSpec::ToString() const {
  if (kind == Kind::kRandom) return "random";
  char buf[96];
  std::snprintf(buf, sizeof(buf), "mcts(d=%d,b=%d,c=%.6g)",
                mcts.determinizations, mcts.budget_multiplier,
                mcts.exploration);
  return buf;
}

namespace {

std::string Trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

AgentSpec ParseAgentSpec(std::string_view text) {
  const std::string spec = Trim(text);
  auto fail = [&](const std::string& why) -> ConfigError {
    return ConfigError("bad agent spec '" + spec + "': " + why +
                       " (expected random, mcts or mcts(d=10,b=100,c=1.414))");
  };
  AgentSpec out;
  if (spec == "random") return out;
  if (spec.rfind("mcts", 0) != 0) throw fail("unknown agent");
  out.kind = AgentSpec::Kind::kMcts;
  std::string rest = Trim(std::string_view(spec).substr(4));
  if (rest.empty()) return out;
  if (rest.front() != '(' || rest.back() != ')') throw fail("missing parens");
  rest = rest.substr(1, rest.size() - 2);
  std::size_t pos = 0;
  while (pos <= rest.size() && !Trim(rest).empty()) {
    std::size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = Trim(std::string_view(rest).substr(pos, comma - pos));
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw fail("expected key=value");
    const std::string key = Trim(std::string_view(item).substr(0, eq));
    const std::string value = Trim(std::string_view(item).substr(eq + 1));
    try {
      std::size_t used = 0;
      if (key == "d") {
        out.mcts.determinizations = std::stoi(value, &used);
      } else if (key == "b") {
        out.mcts.budget_multiplier = std::stoi(value, &used);
      } else if (key == "c") {
        out.mcts.exploration = std::stod(value, &used);
      } else {
        throw fail("unknown key '" + key + "'");
      }
      if (used != value.size()) throw fail("bad number '" + value + "'");
    } catch (const std::logic_error&) {
      throw fail("bad number '" + value + "'");
    }
    pos = comma + 1;
  }
  if (out.mcts.determinizations < 1 || out.mcts.budget_multiplier < 1) {
    throw fail("d and b must be at least 1");
  }
  if (!(out.mcts.exploration >= 0)) throw fail("c must be non-negative");
  return out;
}

std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec, std::uint64_t seed) {
  if (spec.kind == AgentSpec::Kind::kRandom) {
    return std::make_unique<RandomAgent>(seed);
  }
  return std::make_unique<MctsAgent>(spec.mcts, seed);
}

}  // namespace valet
