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

#ifndef RARELEX_PIPELINE_CONFIG_H_
#define RARELEX_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "common/jsonl.h"
#include "lexicon/lexicon.h"
#include "pipeline/mock_scorer.h"
#include "promptfmt/prompt.h"

namespace rarelex::pipeline {

// One JSON document. Keys:
//   corpus (string or array), lexicon, dataset, out_dir     paths
//   threshold, task ("mednli"|"medsts"), k (int or array), seeds (array)
//   scorer ("mock"|"external"), scorer_cmd, mock_mode, paraphrase_bonus
//   tags_policy ("default", comma list or array), full, augment, threads
// Relative paths resolve against the directory of the document they came
// from.
struct PipelineConfig {
  std::vector<std::string> corpus;
  std::string lexicon;
  std::string dataset;
  std::string out_dir;
  uint64_t threshold = 200000;
  promptfmt::Task task = promptfmt::Task::kMedNli;
  std::vector<size_t> k_values = {16};
  std::vector<uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::string scorer = "mock";
  std::string scorer_command;
  MockScorerPolicy mock;
  std::vector<std::string> tags_policy =
      lexicon::MedicalTagPolicy::Default().substrings;
  bool full = false;
  bool augment = true;
  unsigned threads = 1;

  // Overwrites the fields present in `doc`; unknown keys are rejected.
  void Apply(const Json& doc, const std::filesystem::path& base_dir);

  // Structural checks (ranges, required fields). Input files are checked by
  // the stage that reads them.
  void Validate() const;

  Json ToJson() const;
};

// Reads `path` (if non-empty) and then applies `overrides` (a JSON object
// whose relative paths resolve against the working directory).
PipelineConfig LoadConfig(const std::string& path, const Json& overrides);

}  // namespace rarelex::pipeline

#endif  // RARELEX_PIPELINE_CONFIG_H_
