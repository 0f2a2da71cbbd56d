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

#ifndef RARELEX_PIPELINE_MOCK_SCORER_H_
#define RARELEX_PIPELINE_MOCK_SCORER_H_

#include <string_view>
#include <vector>

#include "evalstats/evaluation.h"
#include "promptfmt/prompt.h"

namespace rarelex::pipeline {

// Deterministic stand-in for a masked language model.
//
//  oracle           the gold token scores 1, every other candidate 0; for a
//                   Yes/No distribution target the scores are the log
//                   probabilities, so a softmax recovers the target.
//  lexical-overlap  J = Jaccard overlap of the token sets on either side of
//                   the mask. Yes = J + bonus * (number of "(" in the
//                   prompt), No = 1 - J, anything else 0.5.
struct MockScorerPolicy {
  enum class Mode { kOracle, kLexicalOverlap };

  Mode mode = Mode::kOracle;
  double paraphrase_bonus = 0.0;

  static Mode ParseMode(std::string_view name);
  static std::string_view ModeName(Mode mode);
  void Validate() const;
};

// Jaccard overlap between the text before and after the mask marker.
double LexicalOverlap(const promptfmt::PromptInstance& instance);

evalstats::PredictionRecord MockScore(const promptfmt::PromptInstance& instance,
                                      const promptfmt::PromptTarget& gold,
                                      const MockScorerPolicy& policy);

std::vector<evalstats::PredictionRecord> MockScoreAll(
    const std::vector<promptfmt::PromptRecord>& prompts,
    const MockScorerPolicy& policy);

}  // namespace rarelex::pipeline

#endif  // RARELEX_PIPELINE_MOCK_SCORER_H_
