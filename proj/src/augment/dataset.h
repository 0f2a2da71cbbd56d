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

#ifndef RARELEX_AUGMENT_DATASET_H_
#define RARELEX_AUGMENT_DATASET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rarelex::augment {

enum class Split { kTrain, kDev, kTest };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);
inline constexpr Split kAllSplits[] = {Split::kTrain, Split::kDev,
                                       Split::kTest};

// Either a class label (MedNLI) or a similarity score (MedSTS).
class Label {
 public:
  Label() = default;
  explicit Label(std::string name) : value_(std::move(name)) {}
  explicit Label(double score) : value_(score) {}

  bool is_name() const { return std::holds_alternative<std::string>(value_); }
  bool is_score() const { return std::holds_alternative<double>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }
  double score() const { return std::get<double>(value_); }

  std::string DebugString() const;
  bool operator==(const Label&) const = default;

 private:
  std::variant<std::string, double> value_;
};

struct AnnotationSpan {
  int sentence_index = 1;  // 1 or 2
  // Insertion point in the original (unannotated) sentence, in bytes; it is
  // the end of the matched surface.
  size_t byte_offset = 0;
  std::string matched_surface;
  std::string inserted_text;  // " (" + paraphrase + ")"
  std::string headword;       // map key that matched

  bool operator==(const AnnotationSpan&) const = default;
};

struct Example {
  std::string id;
  std::string sentence1;
  std::string sentence2;
  Label label;
  Split split = Split::kTrain;
  bool augmented = false;
  std::vector<AnnotationSpan> annotations;
};

struct Dataset {
  std::string name;
  std::vector<Example> examples;

  size_t CountSplit(Split split) const;
  std::vector<const Example*> Select(Split split) const;
};

// JSONL with {id, sentence1, sentence2, label, split}; augmented records add
// "augmented" and "annotations". Ids must be unique.
Dataset LoadDataset(const std::string& path);
std::string SerializeDataset(const Dataset& dataset);
std::string SerializeExamples(const std::vector<Example>& examples);
void SaveDataset(const Dataset& dataset, const std::string& path);

}  // namespace rarelex::augment

#endif  // RARELEX_AUGMENT_DATASET_H_
