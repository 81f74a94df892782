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

#include "valet/engine.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "nlohmann/json.hpp"
#include "valet/errors.h"
#include "valet/registry.h"

namespace valet {

using Json = nlohmann::ordered_json;

int GameRecord::NumDecisions() const {
  return static_cast<int>(std::count_if(
      events.begin(), events.end(),
      [](const Event& e) { return std::holds_alternative<DecisionEvent>(e); }));
}

std::vector<Move> CanonicalLegalMoves(const GameState& state) {
  std::vector<Move> moves;
  if (state.IsTerminal()) return moves;
  state.game().LegalMoves(state, moves);
  std::sort(moves.begin(), moves.end());
  return moves;
}

void Advance(GameState& state, const Move& move) {
  state.AppendHistory(state.ToMove(), move);
  state.game().ApplyMove(state, move);
}

void CheckConservation(const GameState& state) {
  const Game& game = state.game();
  std::vector<int> seen(game.deck().size(), 0);
  for (int loc = 0; loc < game.num_locations(); ++loc) {
    if (game.layout()[loc].klass != LocationClass::kPlay) continue;
    for (CardId c : state.Cards(loc)) {
      if (c >= seen.size()) {
        throw ConsistencyError("card id out of range in " +
                               game.layout()[loc].name);
      }
      ++seen[c];
    }
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c] != 1) {
      throw ConsistencyError(
          game.metadata().id + ": card " + CardText(game.card(c)) +
          " appears " + std::to_string(seen[c]) + " times in play locations");
    }
  }
}

class Session::Recorder : public EventSink {
 public:
  explicit Recorder(GameRecord* record) : record_(record) {}

  void OnCardMove(CardId card, int from, int to, bool reference) override {
    record_->events.emplace_back(CardMoveEvent{card, from, to, reference});
  }
  void OnChance(std::string_view kind) override {
    record_->events.emplace_back(ChanceEvent{std::string(kind)});
  }

 private:
  GameRecord* record_;
};

Session::Session(std::shared_ptr<const Game> game, std::uint64_t seed)
    : game_(std::move(game)),
      record_(std::make_unique<GameRecord>()),
      recorder_(std::make_unique<Recorder>(record_.get())),
      state_(*game_) {
  record_->game = game_->metadata().id;
  record_->seed = seed;
  record_->players = game_->num_players();
  state_ = game_->NewInitialState(seed, recorder_.get());
  state_.AttachSink(recorder_.get());
  Refresh();
}

Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

void Session::Refresh() {
  if (state_.IsTerminal()) {
    record_->scores.assign(state_.Scores().begin(), state_.Scores().end());
    current_ = DecisionPoint{};
    return;
  }
  current_.decision_index = decisions_;
  current_.seat = state_.ToMove();
  current_.legal = CanonicalLegalMoves(state_);
  if (current_.legal.empty()) {
    throw ConsistencyError(game_->metadata().id + ": seat " +
                           std::to_string(current_.seat) +
                           " to move with no legal moves");
  }
}

std::variant<DecisionPoint, GameResult> Session::Current() const {
  if (state_.IsTerminal()) return Result();
  return current_;
}

const DecisionPoint& Session::Decision() const {
  if (state_.IsTerminal()) throw ArgumentError("game is over");
  return current_;
}

GameResult Session::Result() const {
  return GameResult{
      std::vector<int>(state_.Scores().begin(), state_.Scores().end()),
      game_->metadata().scoring};
}

std::vector<Event> Session::Apply(const Move& move) {
  if (state_.IsTerminal()) throw IllegalMoveError("game is over");
  auto it = std::find(current_.legal.begin(), current_.legal.end(), move);
  if (it == current_.legal.end()) {
    std::string msg = "illegal move '" + game_->MoveText(move) + "'; legal: ";
    for (std::size_t i = 0; i < current_.legal.size(); ++i) {
      if (i > 0) msg += ", ";
      msg += game_->MoveText(current_.legal[i]);
    }
    throw IllegalMoveError(msg);
  }
  if (decisions_ >= kSafetyCap) {
    throw SafetyCapError(game_->metadata().id + ": exceeded " +
                         std::to_string(kSafetyCap) + " decisions");
  }
  const std::size_t first = record_->events.size();
  record_->events.emplace_back(DecisionEvent{
      decisions_, current_.seat, static_cast<int>(current_.legal.size()),
      static_cast<int>(it - current_.legal.begin()), game_->MoveText(move)});
  ++decisions_;
  Advance(state_, move);
  Refresh();
  return std::vector<Event>(record_->events.begin() + first,
                            record_->events.end());
}

std::vector<Event> Session::ApplyIndex(int canonical_index) {
  if (state_.IsTerminal()) throw IllegalMoveError("game is over");
  if (canonical_index < 0 ||
      canonical_index >= static_cast<int>(current_.legal.size())) {
    throw IllegalMoveError("move index " + std::to_string(canonical_index) +
                           " out of range [0, " +
                           std::to_string(current_.legal.size()) + ")");
  }
  return Apply(current_.legal[canonical_index]);
}

Session Start(std::string_view game_id, std::uint64_t seed) {
  return Session(LookupGame(game_id), seed);
}

GameRecord Run(std::shared_ptr<const Game> game, std::uint64_t seed,
               std::span<Agent* const> agents) {
  if (static_cast<int>(agents.size()) != game->num_players()) {
    throw ArgumentError(game->metadata().id + " needs " +
                        std::to_string(game->num_players()) + " agents, got " +
                        std::to_string(agents.size()));
  }
  Session session(std::move(game), seed);
  while (!session.IsTerminal()) {
    const DecisionPoint& point = session.Decision();
    Move move = agents[point.seat]->Choose(session.state(), point);
    session.Apply(move);
  }
  return session.record();
}

GameRecord Run(std::string_view game_id, std::uint64_t seed,
               std::span<Agent* const> agents) {
  return Run(LookupGame(game_id), seed, agents);
}

GameState Replay(const GameRecord& record) {
  Session session(LookupGame(record.game), record.seed);
  for (const Event& e : record.events) {
    if (const auto* d = std::get_if<DecisionEvent>(&e)) {
      session.ApplyIndex(d->chosen);
    }
  }
  return session.state();
}

std::string RecordToJsonl(const GameRecord& record) {
  std::shared_ptr<const Game> game = LookupGame(record.game);
  std::string out;
  auto line = [&out](const Json& j) {
    out += j.dump();
    out += '\n';
  };
  line(Json{{"game", record.game},
            {"seed", record.seed},
            {"players", record.players}});
  for (const Event& e : record.events) {
    if (const auto* d = std::get_if<DecisionEvent>(&e)) {
      line(Json{{"t", "decision"},
                {"i", d->index},
                {"seat", d->seat},
                {"n", d->num_legal},
                {"choice", d->chosen},
                {"move", d->move}});
    } else if (const auto* m = std::get_if<CardMoveEvent>(&e)) {
      Json j{{"t", "move"},
             {"card", m->card},
             {"face", CardText(game->card(m->card))},
             {"from", m->from},
             {"to", m->to}};
      if (m->reference) j["ref"] = true;
      line(j);
    } else {
      line(Json{{"t", "chance"}, {"kind", std::get<ChanceEvent>(e).kind}});
    }
  }
  line(Json{{"scores", record.scores}});
  return out;
}

GameRecord RecordFromJsonl(std::string_view text) {
  GameRecord record;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  bool have_trailer = false;
  auto fail = [&](const std::string& why) {
    throw ParseError("record line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.empty()) continue;
    if (have_trailer) fail("content after trailer");
    Json j;
    try {
      j = Json::parse(raw);
      if (!have_header) {
        if (!j.contains("game")) fail("missing header");
        record.game = j.at("game").get<std::string>();
        record.seed = j.at("seed").get<std::uint64_t>();
        record.players = j.at("players").get<int>();
        have_header = true;
        continue;
      }
      if (j.contains("scores")) {
        record.scores = j.at("scores").get<std::vector<int>>();
        have_trailer = true;
        continue;
      }
      const std::string t = j.at("t").get<std::string>();
      if (t == "decision") {
        record.events.emplace_back(DecisionEvent{
            j.at("i").get<int>(), j.at("seat").get<int>(),
            j.at("n").get<int>(), j.at("choice").get<int>(),
            j.at("move").get<std::string>()});
      } else if (t == "move") {
        record.events.emplace_back(CardMoveEvent{
            j.at("card").get<CardId>(), j.at("from").get<int>(),
            j.at("to").get<int>(), j.value("ref", false)});
      } else if (t == "chance") {
        record.events.emplace_back(
            ChanceEvent{j.at("kind").get<std::string>()});
      } else {
        fail("unknown event type '" + t + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw ParseError("record line 1: empty record");
  if (!have_trailer) {
    throw ParseError("record line " + std::to_string(line_no) +
                     ": missing scores trailer");
  }
  return record;
}

}  // namespace valet
