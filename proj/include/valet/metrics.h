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

#ifndef VALET_METRICS_H_
#define VALET_METRICS_H_

#include <span>
#include <string>
#include <vector>

#include "valet/engine.h"

namespace valet {

// A record tagged with its place in an experiment.
struct LabeledRecord {
  std::string condition;  // "random" or "mcts"
  int sim = 0;
  const GameRecord* record = nullptr;
};

struct BranchingSample {
  std::string game;
  std::string condition;
  int sim = 0;
  int decision_index = 0;
  int seat = 0;
  int num_choices = 0;
  bool operator==(const BranchingSample&) const = default;
};

struct LengthSample {
  std::string game;
  std::string condition;
  int sim = 0;
  int length = 0;
  bool operator==(const LengthSample&) const = default;
};

struct ScoreSample {
  std::string game;
  std::string condition;
  int sim = 0;
  int seat = 0;
  int score = 0;
  bool operator==(const ScoreSample&) const = default;
};

std::vector<BranchingSample> ExtractBranching(
    std::span<const LabeledRecord> records);
std::vector<LengthSample> ExtractLengths(std::span<const LabeledRecord> records);
// Scores of one seat (seat 0 by default).
std::vector<ScoreSample> ExtractScores(std::span<const LabeledRecord> records,
                                       int seat = 0);

// Five-number summary plus mean. Quartiles interpolate linearly between the
// closest ranks: for sorted x[0..n-1], q(p) = x[k] + f * (x[k+1] - x[k]) with
// k = floor((n-1)p) and f = (n-1)p - k.
struct Summary {
  int count = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};
double Quantile(std::vector<double> values, double p);
// Throws ArgumentError for an empty sample.
Summary Summarize(std::span<const double> values);

std::string BranchingCsv(std::span<const BranchingSample> samples);
std::string LengthsCsv(std::span<const LengthSample> samples);
std::string ScoresCsv(std::span<const ScoreSample> samples);

}  // namespace valet

#endif  // VALET_METRICS_H_
