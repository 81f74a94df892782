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

#include "valet/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "valet/errors.h"

namespace valet {

std::vector<BranchingSample> ExtractBranching(
    std::span<const LabeledRecord> records) {
  std::vector<BranchingSample> out;
  for (const LabeledRecord& r : records) {
    for (const Event& e : r.record->events) {
      if (const auto* d = std::get_if<DecisionEvent>(&e)) {
        out.push_back({r.record->game, r.condition, r.sim, d->index, d->seat,
                       d->num_legal});
      }
    }
  }
  return out;
}

std::vector<LengthSample> ExtractLengths(
    std::span<const LabeledRecord> records) {
  std::vector<LengthSample> out;
  for (const LabeledRecord& r : records) {
    out.push_back({r.record->game, r.condition, r.sim,
                   r.record->NumDecisions()});
  }
  return out;
}

std::vector<ScoreSample> ExtractScores(std::span<const LabeledRecord> records,
                                       int seat) {
  std::vector<ScoreSample> out;
  for (const LabeledRecord& r : records) {
    if (seat < 0 || seat >= static_cast<int>(r.record->scores.size())) {
      throw ArgumentError("seat " + std::to_string(seat) + " out of range for " +
                          r.record->game);
    }
    out.push_back(
        {r.record->game, r.condition, r.sim, seat, r.record->scores[seat]});
  }
  return out;
}

double Quantile(std::vector<double> values, double p) {
  if (values.empty()) throw ArgumentError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = (values.size() - 1) * p;
  const std::size_t k = static_cast<std::size_t>(std::floor(pos));
  if (k + 1 >= values.size()) return values.back();
  return values[k] + (pos - k) * (values[k + 1] - values[k]);
}

Summary Summarize(std::span<const double> values) {
  if (values.empty()) throw ArgumentError("summary of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  Summary s;
  s.count = static_cast<int>(v.size());
  s.min = *std::min_element(v.begin(), v.end());
  s.max = *std::max_element(v.begin(), v.end());
  s.q1 = Quantile(v, 0.25);
  s.median = Quantile(v, 0.5);
  s.q3 = Quantile(v, 0.75);
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  return s;
}

std::string BranchingCsv(std::span<const BranchingSample> samples) {
  std::string out = "game,condition,sim,decision_index,seat,num_choices\n";
  for (const auto& s : samples) {
    out += s.game + ',' + s.condition + ',' + std::to_string(s.sim) + ',' +
           std::to_string(s.decision_index) + ',' + std::to_string(s.seat) +
           ',' + std::to_string(s.num_choices) + '\n';
  }
  return out;
}

std::string LengthsCsv(std::span<const LengthSample> samples) {
  std::string out = "game,condition,sim,length\n";
  for (const auto& s : samples) {
    out += s.game + ',' + s.condition + ',' + std::to_string(s.sim) + ',' +
           std::to_string(s.length) + '\n';
  }
  return out;
}

std::string ScoresCsv(std::span<const ScoreSample> samples) {
  std::string out = "game,condition,sim,seat,score\n";
  for (const auto& s : samples) {
    out += s.game + ',' + s.condition + ',' + std::to_string(s.sim) + ',' +
           std::to_string(s.seat) + ',' + std::to_string(s.score) + '\n';
  }
  return out;
}

}  // namespace valet
