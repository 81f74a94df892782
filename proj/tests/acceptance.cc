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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "support.h"
#include "valet/agents.h"
#include "valet/card.h"
#include "valet/determinize.h"
#include "valet/engine.h"
#include "valet/harness.h"
#include "valet/infoflow.h"
#include "valet/metrics.h"
#include "valet/observation.h"
#include "valet/registry.h"
#include "valet/rng.h"

namespace valet {
namespace {

namespace fs = std::filesystem;
using testing::ReferenceTable;

constexpr std::uint64_t kMasterSeed = 20240101;
constexpr int kRandomSims = 100;
constexpr int kMctsSims = 20;
constexpr int kTriplesPerGame = 48;  // 21 games x 48 >= 1000 triples

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Everything gathered from the checked random playthroughs.
struct Corpus {
  std::map<std::string, std::vector<GameRecord>> records;
  std::map<std::string, std::string> errors;
  // Sims whose trick leader saw a growing number of choices.
  std::map<std::string, std::vector<int>> leader_violations;
  std::map<std::string, int> leader_decisions;
  struct Triple {
    GameState state;
    int seat;
  };
  std::map<std::string, std::vector<Triple>> triples;
  double seconds = 0;
};

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string Fixed(double v, int digits = 3) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(digits);
  ss << v;
  return ss.str();
}

Corpus BuildCorpus() {
  Corpus corpus;
  const auto t0 = std::chrono::steady_clock::now();
  for (const std::string& id : GameIds()) {
    const auto game = LookupGame(id);
    const bool tricks = game->metadata().tricks;
    const int trick = tricks ? testing::LocationByName(*game, "trick") : -1;
    Rng probe(DeriveSeed(kMasterSeed, "probe/" + id));
    try {
      for (int i = 0; i < kRandomSims; ++i) {
        std::vector<GameState> states;
        std::vector<int> leader_counts;
        const bool sample =
            static_cast<int>(corpus.triples[id].size()) < kTriplesPerGame;
        GameRecord record = testing::PlayRandomChecked(
            id, SimSeed(kMasterSeed, id, kRandomCondition, i),
            [&](const GameState& state, const DecisionPoint& point) {
              if (sample) states.push_back(state);
              if (!tricks || !state.Empty(trick)) return;
              const bool card_play = std::all_of(
                  point.legal.begin(), point.legal.end(),
                  [](const Move& m) { return m.kind == 0; });
              if (card_play) {
                leader_counts.push_back(static_cast<int>(point.legal.size()));
              }
            });
        for (std::size_t k = 1; k < leader_counts.size(); ++k) {
          if (leader_counts[k] > leader_counts[k - 1]) {
            corpus.leader_violations[id].push_back(i);
            break;
          }
        }
        corpus.leader_decisions[id] += static_cast<int>(leader_counts.size());
        if (sample && !states.empty()) {
          GameState& chosen = states[probe.Below(states.size())];
          const int seat = static_cast<int>(probe.Below(game->num_players()));
          corpus.triples[id].push_back({std::move(chosen), seat});
        }
        corpus.records[id].push_back(std::move(record));
      }
    } catch (const std::exception& e) {
      corpus.errors[id] = e.what();
    }
  }
  corpus.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return corpus;
}

Verdict Conformance(const Corpus& corpus) {
  std::vector<std::string> bad;
  for (const auto& [id, msg] : corpus.errors) bad.push_back(id + ": " + msg);
  for (const std::string& id : GameIds()) {
    const auto it = corpus.records.find(id);
    const int n = it == corpus.records.end()
                      ? 0
                      : static_cast<int>(it->second.size());
    if (n != kRandomSims && !corpus.errors.count(id)) {
      bad.push_back(id + ": " + std::to_string(n) + " sims");
    }
  }
  if (GameIds().size() != 21) bad.push_back("registry size");
  const bool fast = corpus.seconds < 300;
  if (!fast) bad.push_back("took " + Fixed(corpus.seconds, 1) + "s");
  if (!bad.empty()) return {false, Join(bad)};
  return {true, "21 games x 100 random sims, conservation and observation "
                "checked at every state, " +
                    Fixed(corpus.seconds, 1) + "s"};
}

Verdict StructuralConstants(const Corpus& corpus) {
  std::vector<std::string> bad;
  const std::map<DeckSpec, int> sizes = {
      {DeckSpec::kFrench52, 52},  {DeckSpec::kPiquet32, 32},
      {DeckSpec::kEuchre24, 24},  {DeckSpec::kSpanish40, 40},
      {DeckSpec::kItalian40, 40}, {DeckSpec::kTarot78, 78},
      {DeckSpec::kLeduc6, 6}};
  for (const auto& [spec, size] : sizes) {
    const int got = static_cast<int>(BuildDeck(spec).size());
    if (got != size) {
      bad.push_back(std::string(DeckSpecName(spec)) + " has " +
                    std::to_string(got) + " cards");
    }
  }
  int team_games = 0;
  for (const auto& row : ReferenceTable()) {
    const GameMetadata& m = LookupGame(row.id)->metadata();
    if (m.players != row.players) {
      bad.push_back(std::string(row.id) + " players " +
                    std::to_string(m.players));
    }
    if (m.teams != row.teams) bad.push_back(std::string(row.id) + " teams");
    if (!row.teams) continue;
    ++team_games;
    const auto it = corpus.records.find(std::string(row.id));
    if (it == corpus.records.end()) continue;
    for (const GameRecord& r : it->second) {
      for (int a = 0; a < m.players; ++a) {
        for (int b = 0; b < m.players; ++b) {
          if (m.team_of_seat[a] == m.team_of_seat[b] &&
              r.scores[a] != r.scores[b]) {
            bad.push_back(std::string(row.id) + " partners differ (seed " +
                          std::to_string(r.seed) + ")");
            a = b = m.players;
          }
        }
      }
    }
  }
  if (team_games != 5) bad.push_back("team games " + std::to_string(team_games));
  if (!bad.empty()) return {false, Join(bad)};
  return {true, "deck sizes, 21 player counts, 5 team games share scores"};
}

Verdict FixedLengths(const Corpus& corpus) {
  const std::map<std::string, int> expected = {
      {"hearts", 52}, {"whist", 52}, {"sueca", 40}, {"agram", 18}};
  std::vector<std::string> bad;
  for (const auto& [id, len] : expected) {
    const auto it = corpus.records.find(id);
    if (it == corpus.records.end() ||
        static_cast<int>(it->second.size()) != kRandomSims) {
      bad.push_back(id + " missing");
      continue;
    }
    for (const GameRecord& r : it->second) {
      if (r.NumDecisions() != len) {
        bad.push_back(id + " seed " + std::to_string(r.seed) + " has " +
                      std::to_string(r.NumDecisions()));
        break;
      }
    }
  }
  if (!bad.empty()) return {false, Join(bad)};
  return {true, "hearts 52, whist 52, sueca 40, agram 18 over 100 seeds"};
}

std::vector<SimResult> RunCell(const std::string& game,
                               std::string_view condition, int n,
                               const MctsConfig& config) {
  std::vector<SimResult> sims(n);
  ParallelFor(n, 0, [&](int i) {
    sims[i] = RunSim(game, condition, i,
                     SimSeed(kMasterSeed, game, condition, i), config);
  });
  return sims;
}

Verdict ScoreSupports(const Corpus& corpus) {
  std::vector<std::string> bad;
  for (const std::string id : {"agram", "cuckoo"}) {
    std::set<int> seen;
    for (const GameRecord& r : corpus.records.at(id)) seen.insert(r.scores[0]);
    for (const SimResult& s : RunCell(id, kMctsCondition, kRandomSims, {})) {
      if (!s.ok) {
        bad.push_back(id + " mcts sim failed: " + s.error);
        continue;
      }
      seen.insert(s.record.scores[0]);
    }
    for (int v : seen) {
      if (v != 0 && v != 1) {
        bad.push_back(id + " seat 0 scored " + std::to_string(v));
      }
    }
  }
  int lo = 1 << 30, hi = -(1 << 30);
  for (const GameRecord& r : corpus.records.at("klaverjassen")) {
    lo = std::min(lo, r.scores[0]);
    hi = std::max(hi, r.scores[0]);
  }
  if (hi - lo < 100) {
    bad.push_back("klaverjassen spread " + std::to_string(hi - lo));
  }
  if (!bad.empty()) return {false, Join(bad)};
  return {true, "agram and cuckoo in {0,1} under both conditions; "
                "klaverjassen spread " +
                    std::to_string(hi - lo) + " (" + std::to_string(lo) +
                    ".." + std::to_string(hi) + ")"};
}

std::map<std::string, double> RandomMedians(const Corpus& corpus) {
  std::map<std::string, double> medians;
  for (const auto& [id, records] : corpus.records) {
    std::vector<double> lengths;
    for (const GameRecord& r : records) lengths.push_back(r.NumDecisions());
    medians[id] = Quantile(lengths, 0.5);
  }
  return medians;
}

Verdict LengthLandscape(const Corpus& corpus) {
  const auto medians = RandomMedians(corpus);
  int inside = 0;
  std::vector<std::pair<double, std::string>> ranked;
  for (const auto& [id, m] : medians) {
    if (m >= 10 && m <= 100) ++inside;
    ranked.push_back({m, id});
  }
  std::sort(ranked.rbegin(), ranked.rend());
  std::set<std::string> top;
  for (std::size_t i = 0; i < 2 && i < ranked.size(); ++i) {
    top.insert(ranked[i].second);
  }
  const bool pass = inside >= 15 && top == std::set<std::string>{
                                              "rummy", "skitgubbe"};
  std::string detail = std::to_string(inside) + "/21 medians in [10,100]; top";
  for (std::size_t i = 0; i < 3 && i < ranked.size(); ++i) {
    detail += " " + ranked[i].second + "=" + Fixed(ranked[i].first, 1);
  }
  return {pass, detail};
}

Verdict BranchingProfile(const Corpus& corpus) {
  std::vector<std::string> bad;
  int games = 0, decisions = 0;
  for (const auto& row : ReferenceTable()) {
    if (!row.tricks) continue;
    ++games;
    const std::string id(row.id);
    const auto it = corpus.leader_decisions.find(id);
    const int count = it == corpus.leader_decisions.end() ? 0 : it->second;
    decisions += count;
    if (count == 0) bad.push_back(id + " has no leader decisions");
    const auto v = corpus.leader_violations.find(id);
    if (v != corpus.leader_violations.end() && !v->second.empty()) {
      bad.push_back(id + " grows in " + std::to_string(v->second.size()) +
                    " sims");
    }
  }
  if (!bad.empty()) return {false, Join(bad)};
  return {true, std::to_string(games) + " trick-taking games, " +
                    std::to_string(decisions) +
                    " leader decisions, never increasing"};
}

std::vector<std::uint8_t> SortedBacks(const GameState& state, int loc) {
  std::vector<std::uint8_t> backs;
  for (CardId c : state.Cards(loc)) backs.push_back(state.card(c).back);
  std::sort(backs.begin(), backs.end());
  return backs;
}

Verdict Determinization(const Corpus& corpus) {
  std::vector<std::string> bad;
  int triples = 0;
  int goofspiel = 0;
  for (const auto& [id, list] : corpus.triples) {
    const auto game = LookupGame(id);
    Rng rng(DeriveSeed(kMasterSeed, "determinize/" + id));
    for (const auto& t : list) {
      ++triples;
      const Observation obs = Observe(t.state, t.seat);
      try {
        const GameState det = Determinize(*game, obs, rng);
        CheckConservation(det);
        testing::CheckObservationSound(det);
        if (!(Observe(det, t.seat) == obs)) {
          bad.push_back(id + " round trip differs");
          break;
        }
        for (int loc = 0; loc < game->num_locations(); ++loc) {
          if (game->layout()[loc].klass != LocationClass::kPlay) continue;
          if (SortedBacks(det, loc) != SortedBacks(t.state, loc)) {
            bad.push_back(id + " cross-back assignment at " +
                          game->layout()[loc].name);
            break;
          }
        }
        if (id == "goofspiel") ++goofspiel;
      } catch (const std::exception& e) {
        bad.push_back(id + ": " + e.what());
        break;
      }
    }
  }
  if (triples < 1000) bad.push_back(std::to_string(triples) + " triples");

  // Leduc: seat 0 holds one card; the opponent's card is drawn from the five
  // others, so its rank matches seat 0's with probability 1/5 and each other
  // rank with 2/5.
  const auto leduc = LookupGame("leduc");
  const int hand1 = testing::LocationByName(*leduc, "hand1");
  const int hand0 = testing::LocationByName(*leduc, "hand0");
  constexpr int kSamples = 5000;
  double worst_sigma = 0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GameState state = leduc->NewInitialState(seed);
    const Observation obs = Observe(state, 0);
    const int own_rank = state.card(state.Cards(hand0)[0]).rank;
    std::map<int, int> counts;
    Rng rng(DeriveSeed(kMasterSeed, "leduc", seed));
    for (int i = 0; i < kSamples; ++i) {
      const GameState det = Determinize(*leduc, obs, rng);
      ++counts[det.card(det.Cards(hand1)[0]).rank];
    }
    for (int rank : {kJack, kQueen, kKing}) {
      const double p = rank == own_rank ? 0.2 : 0.4;
      const double sigma = std::sqrt(p * (1 - p) / kSamples);
      const double dev =
          std::abs(counts[rank] / static_cast<double>(kSamples) - p) / sigma;
      worst_sigma = std::max(worst_sigma, dev);
    }
  }
  if (worst_sigma > 3) {
    bad.push_back("leduc frequencies off by " + Fixed(worst_sigma, 2) +
                  " sigma");
  }
  if (!bad.empty()) return {false, Join(bad)};
  return {true, std::to_string(triples) + " round trips (" +
                    std::to_string(goofspiel) +
                    " goofspiel, no cross-back); leduc within " +
                    Fixed(worst_sigma, 2) + " sigma"};
}

Verdict BudgetAccounting() {
  const MctsConfig config;  // defaults
  std::vector<std::string> bad;
  int checked = 0, forced = 0;
  for (const std::string id : {"hearts", "scopa", "goofspiel", "leduc"}) {
    const auto game = LookupGame(id);
    Session session(game, DeriveSeed(kMasterSeed, "budget/" + id));
    Rng rng(DeriveSeed(kMasterSeed, "budget-play/" + id));
    for (int step = 0; step < 6 && !session.IsTerminal(); ++step) {
      const DecisionPoint& point = session.Decision();
      MctsStats stats;
      MctsChoose(*game, Observe(session.state(), point.seat), point.legal,
                 config, DeriveSeed(kMasterSeed, "budget", step), &stats);
      const std::int64_t legal = static_cast<std::int64_t>(point.legal.size());
      const std::int64_t want =
          legal > 1 ? std::int64_t{config.determinizations} *
                          config.budget_multiplier * legal
                    : 0;
      if (legal > 1) ++checked; else ++forced;
      if (stats.rollouts != want || stats.iterations != want) {
        bad.push_back(id + " step " + std::to_string(step) + ": " +
                      std::to_string(stats.rollouts) + " rollouts, want " +
                      std::to_string(want));
      }
      session.ApplyIndex(static_cast<int>(rng.Below(point.legal.size())));
    }
  }
  if (!bad.empty()) return {false, Join(bad)};
  return {true, std::to_string(checked) +
                    " searched decisions used exactly 10x100x|legal| "
                    "rollouts; " +
                    std::to_string(forced) + " forced ones used none"};
}

Verdict Efficacy(const Corpus& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  std::map<std::string, double> gap;
  std::vector<std::string> bad;
  std::string detail;
  for (const std::string id : {"hearts", "whist", "sueca", "scopa", "rummy",
                               "go_fish", "crazy_eights"}) {
    const GameMetadata& m = LookupGame(id)->metadata();
    double random = 0;
    for (const GameRecord& r : corpus.records.at(id)) {
      random += Utility(m, r.scores[0]);
    }
    random /= kRandomSims;
    double mcts = 0;
    for (const SimResult& s : RunCell(id, kMctsCondition, kMctsSims, {})) {
      if (!s.ok) bad.push_back(id + " mcts sim failed: " + s.error);
      mcts += s.seat0_utility;
    }
    mcts /= kMctsSims;
    gap[id] = mcts - random;
    detail += " " + id + "=" + Fixed(mcts, 2) + "/" + Fixed(random, 2);
  }
  for (const std::string id : {"hearts", "whist", "sueca", "scopa", "rummy"}) {
    if (gap[id] <= 0) bad.push_back(id + " not above random");
  }
  for (const std::string id : {"go_fish", "crazy_eights"}) {
    if (gap[id] >= gap["rummy"]) bad.push_back(id + " gap >= rummy gap");
  }
  const double minutes = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count() /
                         60;
  if (minutes >= 60) bad.push_back("took " + Fixed(minutes, 1) + " min");
  detail = "mcts/random utility:" + detail + " (" + Fixed(minutes, 1) + " min)";
  if (!bad.empty()) return {false, Join(bad) + "; " + detail};
  return {true, detail};
}

Verdict Classification(const Corpus& corpus) {
  std::vector<std::string> bad;
  for (const auto& row : ReferenceTable()) {
    const std::string id(row.id);
    const auto it = corpus.records.find(id);
    if (it == corpus.records.end()) {
      bad.push_back(id + " has no records");
      continue;
    }
    const auto game = LookupGame(id);
    const InfoLabels got =
        Classify(BuildGraph(*game, it->second), game->metadata());
    if (got != InfoLabels::Parse(row.info)) {
      bad.push_back(id + " got '" + got.ToString() + "' want '" +
                    std::string(row.info) + "'");
    }
  }
  if (!bad.empty()) return {false, Join(bad)};
  return {true, "21/21 games match the reference Information column"};
}

std::map<std::string, std::string> ReadTree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), root).generic_string()] =
        ReadTextFile(entry.path());
  }
  return files;
}

Verdict Determinism() {
  const fs::path root =
      fs::temp_directory_path() /
      ("valet_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  ExperimentPlan plan;
  plan.games = GameIds();
  plan.n_per_condition = 3;
  plan.master_seed = kMasterSeed;
  plan.mcts.determinizations = 2;
  plan.mcts.budget_multiplier = 5;
  std::vector<std::map<std::string, std::string>> trees;
  std::string error;
  for (int jobs : {1, 3}) {
    plan.jobs = jobs;
    plan.out_dir = root / ("jobs" + std::to_string(jobs));
    try {
      RunExperiment(plan);
    } catch (const std::exception& e) {
      error = e.what();
    }
    trees.push_back(ReadTree(plan.out_dir));
  }
  // Re-deriving the metrics from the written records must also agree.
  const fs::path again = root / "reanalyzed";
  WriteMetrics(Analyze(LoadSims(root / "jobs1")), again);
  const auto reanalyzed = ReadTree(again);
  fs::remove_all(root);
  std::vector<std::string> bad;
  if (!error.empty()) bad.push_back(error);
  if (trees[0] != trees[1]) bad.push_back("outputs differ between runs");
  for (const auto& [name, text] : reanalyzed) {
    const auto it = trees[0].find(name);
    if (it == trees[0].end() || it->second != text) {
      bad.push_back("re-analysis differs at " + name);
    }
  }
  int jsonl = 0, csv = 0;
  for (const auto& [name, text] : trees[0]) {
    if (name.ends_with(".jsonl")) ++jsonl;
    if (name.ends_with(".csv")) ++csv;
  }
  if (jsonl != 21 * 2 * 3 || csv != 3) bad.push_back("unexpected file count");
  if (!bad.empty()) return {false, Join(bad)};
  return {true, std::to_string(jsonl) + " JSONL and " + std::to_string(csv) +
                    " CSV files byte-identical across reruns and job counts"};
}

}  // namespace
}  // namespace valet

int main() {
  using valet::Verdict;
  int failures = 0;
  const auto report = [&](const std::string& name, Verdict v) {
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail
              << std::endl;
    if (!v.pass) ++failures;
  };
  const auto guarded = [&](const std::string& name,
                           const std::function<Verdict()>& fn) {
    try {
      report(name, fn());
    } catch (const std::exception& e) {
      report(name, {false, std::string("exception: ") + e.what()});
    }
  };
  const valet::Corpus corpus = valet::BuildCorpus();
  guarded("conformance", [&] { return valet::Conformance(corpus); });
  guarded("structural-constants",
          [&] { return valet::StructuralConstants(corpus); });
  guarded("fixed-lengths", [&] { return valet::FixedLengths(corpus); });
  guarded("score-supports", [&] { return valet::ScoreSupports(corpus); });
  guarded("length-landscape", [&] { return valet::LengthLandscape(corpus); });
  guarded("branching-profile",
          [&] { return valet::BranchingProfile(corpus); });
  guarded("determinization", [&] { return valet::Determinization(corpus); });
  guarded("mcts-budget", [] { return valet::BudgetAccounting(); });
  guarded("mcts-efficacy", [&] { return valet::Efficacy(corpus); });
  guarded("information-classification",
          [&] { return valet::Classification(corpus); });
  guarded("determinism", [] { return valet::Determinism(); });
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " +
                                                 std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
