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

#ifndef RARELEX_AUGMENT_ANNOTATOR_H_
#define RARELEX_AUGMENT_ANNOTATOR_H_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "augment/dataset.h"
#include "selector/paraphrase_map.h"

namespace rarelex::augment {

// Finds whole-word occurrences of map headwords and appends
// " (paraphrase)" after each one.
//
// Word boundaries come from the corpus tokenizer. Abbreviations match their
// exact surface; other headwords match case-insensitively. An occurrence
// already followed by "(" is left alone, and an existing
// "word (paraphrase)" annotation is skipped as a whole so nothing inside it
// gets annotated again.
class Annotator {
 public:
  explicit Annotator(const selector::ParaphraseMap& map);

  std::vector<AnnotationSpan> FindMatches(std::string_view text,
                                          int sentence_index = 1) const;

  struct Result {
    std::string text;
    std::vector<AnnotationSpan> spans;
  };
  Result Augment(std::string_view text, int sentence_index = 1) const;

 private:
  struct Target {
    std::string headword;
    std::string inserted;
  };

  const Target* Lookup(std::string_view surface,
                       const std::string& folded) const;

  std::unordered_map<std::string, Target> by_surface_;
  std::unordered_map<std::string, Target> by_fold_;
};

inline std::string InsertionFor(std::string_view paraphrase) {
  return " (" + std::string(paraphrase) + ")";
}

// Removes the recorded insertions, recovering the original text. Throws
// kInvalidArgument if a span does not match the text.
std::string StripAnnotations(std::string_view augmented,
                             std::span<const AnnotationSpan> spans);

struct SplitStats {
  Split split = Split::kTrain;
  size_t examples = 0;
  size_t distinct_words = 0;
  size_t total_annotations = 0;

  bool operator==(const SplitStats&) const = default;
};

struct AugmentStats {
  // Only splits present in the dataset, in train/dev/test order.
  std::vector<SplitStats> splits;

  const SplitStats* Find(Split split) const;
};

struct AugmentResult {
  Dataset dataset;
  AugmentStats stats;
};

// Augments both sentences of every example. Ids, labels and order are kept.
AugmentResult AugmentDataset(const Dataset& dataset,
                             const selector::ParaphraseMap& map);

// Same statistics without materialising the augmented dataset.
AugmentStats CountAnnotations(const Dataset& dataset,
                              const Annotator& annotator);

std::string SerializeStats(const AugmentStats& stats);

}  // namespace rarelex::augment

#endif  // RARELEX_AUGMENT_ANNOTATOR_H_
