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

#ifndef RARELEX_PROMPTFMT_PROMPT_H_
#define RARELEX_PROMPTFMT_PROMPT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "augment/dataset.h"

namespace rarelex::promptfmt {

enum class Task { kMedNli, kMedSts };

std::string_view TaskName(Task task);
Task ParseTask(std::string_view name);

inline constexpr std::string_view kMaskMarker = "[MASK]";

struct Verbalizer {
  std::string label;
  std::string token;
};

// A cloze pattern with {sent1}, {mask} and {sent2} placeholders plus the
// label <-> answer-token mapping. Verbalizer order is the tie-break order
// used when scoring.
class PromptTemplate {
 public:
  PromptTemplate(std::string pattern, std::vector<Verbalizer> verbalizers);

  // "<s1>. [MASK]. <s2>" with Yes/No/maybe (MedNLI) or Yes/No (MedSTS).
  static PromptTemplate ForTask(Task task);

  const std::string& pattern() const { return pattern_; }
  const std::vector<Verbalizer>& verbalizers() const { return verbalizers_; }
  std::vector<std::string> CandidateTokens() const;

  // Throws kInvalidArgument listing the valid labels/tokens.
  const std::string& Verbalize(std::string_view label) const;
  const std::string& Unverbalize(std::string_view token) const;

  void Validate() const;

 private:
  std::string pattern_;
  std::vector<Verbalizer> verbalizers_;
};

struct PromptInstance {
  std::string example_id;
  std::string rendered;
  size_t mask_offset = 0;  // byte offset of kMaskMarker in `rendered`
  std::vector<std::string> candidate_tokens;

  bool operator==(const PromptInstance&) const = default;
};

struct ProbabilityPair {
  double yes = 0.0;
  double no = 0.0;

  bool operator==(const ProbabilityPair&) const = default;
};

// Gold answer: a verbalizer token (classification) or a Yes/No
// distribution (similarity regression).
using PromptTarget = std::variant<std::string, ProbabilityPair>;

struct PromptRecord {
  PromptInstance instance;
  PromptTarget target;
};

// Substitutes the sentences into the pattern. When sent1 already ends in
// terminal punctuation the pattern's own period after it is dropped.
PromptInstance RenderPrompt(const augment::Example& example,
                            const PromptTemplate& tpl);

// score / 5 for Yes, the rest for No. Requires 0 <= score <= 5.
ProbabilityPair ScoreToTarget(double score);

// 5 * p_yes / (p_yes + p_no).
double PredictionToScore(double p_yes, double p_no);

PromptRecord FormatExample(const augment::Example& example, Task task);

std::vector<PromptRecord> FormatDataset(
    const augment::Dataset& dataset, Task task,
    std::optional<augment::Split> only_split = std::nullopt);

// JSONL: {id, text, mask_offset, candidates, target}; target is a token
// string or a [p_yes, p_no] array aligned with the candidates.
std::string SerializePrompts(const std::vector<PromptRecord>& prompts);
void SavePrompts(const std::vector<PromptRecord>& prompts,
                 const std::string& path);
std::vector<PromptRecord> LoadPrompts(const std::string& path);

// Checks the task's label constraint for one example.
void ValidateLabel(const augment::Example& example, Task task);

}  // namespace rarelex::promptfmt

#endif  // RARELEX_PROMPTFMT_PROMPT_H_
