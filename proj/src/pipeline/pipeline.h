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

#ifndef RARELEX_PIPELINE_PIPELINE_H_
#define RARELEX_PIPELINE_PIPELINE_H_

#include <map>
#include <string>
#include <vector>

#include "common/jsonl.h"
#include "evalstats/evaluation.h"
#include "pipeline/config.h"

namespace rarelex::pipeline {

inline constexpr const char* kStageNames[] = {
    "freq", "lexicon", "select", "augment", "format", "sample", "eval"};
inline constexpr const char* kPartialMarker = ".partial";

struct Artifact {
  std::string path;  // relative to the output directory
  std::string sha256;
};

struct StageRecord {
  std::string stage;
  std::vector<Artifact> artifacts;
};

struct RunManifest {
  std::vector<StageRecord> stages;

  const StageRecord* Find(std::string_view stage) const;
  // All artifact hashes keyed by relative path.
  std::map<std::string, std::string> Hashes() const;
  Json ToJson() const;
};

struct RunResult {
  RunManifest manifest;
  std::map<size_t, evalstats::EvalReport> reports;  // keyed by k
};

// Runs every stage into cfg.out_dir and writes manifest.json there. A failing
// stage leaves `<out_dir>/<stage>/.partial` behind and the thrown Error's
// message starts with "stage <name>: ".
RunResult RunPipeline(const PipelineConfig& cfg);

}  // namespace rarelex::pipeline

#endif  // RARELEX_PIPELINE_PIPELINE_H_
