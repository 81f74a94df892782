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

// Python bindings over the C++ core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <string>
#include <vector>

#include "valet/agents.h"
#include "valet/engine.h"
#include "valet/errors.h"
#include "valet/harness.h"
#include "valet/infoflow.h"
#include "valet/registry.h"

namespace py = pybind11;

namespace valet {
namespace {

std::vector<AgentSpec> ParseSpecs(const std::vector<std::string>& specs) {
  std::vector<AgentSpec> out;
  for (const std::string& s : specs) out.push_back(ParseAgentSpec(s));
  return out;
}

std::vector<std::string> SimulateJsonl(const std::string& game,
                                       const std::vector<std::string>& agents,
                                       int n, std::uint64_t seed, int jobs) {
  std::vector<GameRecord> records;
  {
    py::gil_scoped_release release;
    records = Simulate(game, ParseSpecs(agents), n, seed, jobs);
  }
  std::vector<std::string> out;
  for (const GameRecord& r : records) out.push_back(RecordToJsonl(r));
  return out;
}

std::string RunExperimentJson(const std::vector<std::string>& games, int n,
                              std::uint64_t seed,
                              const std::filesystem::path& out_dir,
                              const std::string& mcts,
                              const std::vector<std::string>& conditions,
                              int jobs) {
  ExperimentPlan plan;
  plan.games = games.empty() ? GameIds() : games;
  plan.n_per_condition = n;
  plan.master_seed = seed;
  plan.out_dir = out_dir;
  plan.conditions = conditions;
  plan.jobs = jobs;
  const AgentSpec spec = ParseAgentSpec(mcts);
  if (spec.kind != AgentSpec::Kind::kMcts) {
    throw ConfigError("mcts must be an mcts(...) spec");
  }
  plan.mcts = spec.mcts;
  py::gil_scoped_release release;
  return RunExperiment(plan).summary_json;
}

std::string AnalyzeDir(const std::filesystem::path& dir,
                       const std::filesystem::path& out_dir) {
  const ExperimentResult result = Analyze(LoadSims(dir));
  WriteMetrics(result, out_dir.empty() ? dir : out_dir);
  return result.summary_json;
}

py::dict Infoflow(const std::string& game, int n, std::uint64_t seed) {
  const auto def = LookupGame(game);
  const std::vector<AgentSpec> agents(def->num_players());
  FlowGraph graph;
  {
    py::gil_scoped_release release;
    graph = BuildGraph(*def, Simulate(game, agents, n, seed));
  }
  py::dict out;
  out["dot"] = ToDot(graph);
  out["json"] = ToJson(graph);
  out["labels"] = Classify(graph, def->metadata()).ToString();
  return out;
}

// A playthrough driven from Python, one decision at a time.
class PySession {
 public:
  PySession(const std::string& game, std::uint64_t seed)
      : session_(Start(game, seed)) {}

  bool is_terminal() const { return session_.IsTerminal(); }
  int to_move() const {
    return session_.IsTerminal() ? -1 : session_.Decision().seat;
  }
  std::vector<std::string> legal_moves() const {
    std::vector<std::string> out;
    if (session_.IsTerminal()) return out;
    for (const Move& m : session_.Decision().legal) {
      out.push_back(session_.game().MoveText(m));
    }
    return out;
  }
  void apply(int index) { session_.ApplyIndex(index); }
  std::vector<int> scores() const {
    const auto s = session_.state().Scores();
    return {s.begin(), s.end()};
  }
  int decisions() const { return session_.decisions(); }
  std::string record_jsonl() const { return RecordToJsonl(session_.record()); }

 private:
  Session session_;
};

}  // namespace
}  // namespace valet

PYBIND11_MODULE(_valet, m) {
  using namespace valet;
  m.doc() = "Imperfect-information card game engine, agents and metrics.";

  // Translators registered later are tried first, so the base goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<IllegalMoveError>(m, "IllegalMoveError",
                                           PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("game_ids", &GameIds, "Registered game ids in stable order.");
  m.def("metadata_json", &MetadataJson, "Metadata table as a JSON array.");
  m.def("simulate", &SimulateJsonl, py::arg("game"), py::arg("agents"),
        py::arg("n") = 1, py::arg("seed") = 0, py::arg("jobs") = 1,
        "Plays n games and returns one JSONL record per game.");
  m.def("run_experiment", &RunExperimentJson, py::arg("games"),
        py::arg("n") = 100, py::arg("seed") = 0,
        py::arg("out_dir") = std::filesystem::path(),
        py::arg("mcts") = "mcts",
        py::arg("conditions") = std::vector<std::string>{"random", "mcts"},
        py::arg("jobs") = 0,
        "Runs the random and MCTS conditions; returns summary JSON.");
  m.def("analyze", &AnalyzeDir, py::arg("dir"),
        py::arg("out_dir") = std::filesystem::path(),
        "Writes metrics CSVs and summary.json for a record directory.");
  m.def("infoflow", &Infoflow, py::arg("game"), py::arg("n") = 100,
        py::arg("seed") = 0,
        "Card-movement graph of n random games: dot, json and labels.");

  py::class_<PySession>(m, "Session")
      .def(py::init<const std::string&, std::uint64_t>(), py::arg("game"),
           py::arg("seed") = 0)
      .def_property_readonly("is_terminal", &PySession::is_terminal)
      .def_property_readonly("to_move", &PySession::to_move)
      .def_property_readonly("decisions", &PySession::decisions)
      .def("legal_moves", &PySession::legal_moves)
      .def("apply", &PySession::apply, py::arg("index"))
      .def("scores", &PySession::scores)
      .def("record_jsonl", &PySession::record_jsonl);
}
