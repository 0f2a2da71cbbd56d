// Copyright 2026 The Rarelex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RARELEX_EVALSTATS_EVALUATION_H_
#define RARELEX_EVALSTATS_EVALUATION_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "augment/dataset.h"
#include "promptfmt/prompt.h"

namespace rarelex::evalstats {

// One scorer output line: candidate token -> score, higher is more likely.
// Scores are treated as unnormalized log-probabilities.
struct PredictionRecord {
  std::string example_id;
  std::map<std::string, double> scores;

  bool operator==(const PredictionRecord&) const = default;
};

std::string SerializePredictions(const std::vector<PredictionRecord>& preds);
void SavePredictions(const std::vector<PredictionRecord>& preds,
                     const std::string& path);
std::vector<PredictionRecord> LoadPredictions(const std::string& path);

// Highest-scoring verbalizer token; ties go to the earlier verbalizer.
// Tokens absent from the record never win.
const std::string& ArgmaxToken(const PredictionRecord& pred,
                               const promptfmt::PromptTemplate& tpl);

// Fraction of gold examples whose argmax token unverbalizes to the gold
// label. Every gold id needs exactly one prediction.
double Accuracy(std::span<const PredictionRecord> preds,
                std::span<const augment::Example> gold,
                const promptfmt::PromptTemplate& tpl);

// Predicted similarity scores, in gold order: softmax over Yes/No, then
// mapped back onto [0, 5].
std::vector<double> PredictedSimilarity(std::span<const PredictionRecord> preds,
                                        std::span<const augment::Example> gold,
                                        const promptfmt::PromptTemplate& tpl);

// Accuracy for MedNLI, Pearson r against the gold scores for MedSTS.
double TaskMetric(promptfmt::Task task,
                  std::span<const PredictionRecord> preds,
                  std::span<const augment::Example> gold);

struct SeedResult {
  int64_t seed = 0;
  double value = 0.0;
};

struct EvalReport {
  std::vector<SeedResult> per_seed;
  std::vector<SeedResult> baseline_per_seed;
  size_t n = 0;
  double mean = 0.0;
  double std = 0.0;  // population
  double baseline_mean = 0.0;
  double baseline_std = 0.0;
  double delta = 0.0;
  double t = 0.0;
  double p_value = 1.0;
  bool significant = false;  // p < kSignificanceLevel
};

inline constexpr double kSignificanceLevel = 0.05;

// Mean/std over seeds plus a paired t-test against the baseline. Seeds must
// appear in the same order in both lists.
EvalReport Aggregate(std::span<const SeedResult> ours,
                     std::span<const SeedResult> baseline);

// TSV: seed rows, then summary rows.
std::string SerializeReport(const EvalReport& report);
// Readable "mean ± std" summary plus the paired test result.
std::string Summarize(const EvalReport& report, std::string_view metric);

}  // namespace rarelex::evalstats

#endif  // RARELEX_EVALSTATS_EVALUATION_H_
