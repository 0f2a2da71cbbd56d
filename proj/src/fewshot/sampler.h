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

#ifndef RARELEX_FEWSHOT_SAMPLER_H_
#define RARELEX_FEWSHOT_SAMPLER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "augment/dataset.h"
#include "fewshot/splitmix64.h"
#include "promptfmt/prompt.h"

namespace rarelex::fewshot {

inline constexpr size_t kMinShots = 16;
inline constexpr size_t kMaxShots = 256;

struct SamplePlan {
  promptfmt::Task task = promptfmt::Task::kMedNli;
  size_t k = 16;
  std::vector<uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  // Lifts the [16, 256] range and lets a MedNLI dev sample shrink to the
  // whole dev split when it holds fewer than k examples.
  bool full = false;

  void Validate() const;
};

struct FewShotSplit {
  std::vector<augment::Example> train;
  std::vector<augment::Example> dev;
};

// Fisher-Yates shuffle of the ids sorted bytewise, driven by SplitMix64.
std::vector<std::string> SeededShuffle(std::vector<std::string> ids,
                                       SplitMix64* rng);

// Draws k training examples from the train split. MedNLI takes k dev
// examples from the dev split; MedSTS, which has no dev split, takes the
// next k shuffled training examples so train and dev never overlap.
// Test examples are not touched.
FewShotSplit SampleFewShot(const augment::Dataset& dataset,
                           const SamplePlan& plan, uint64_t seed);

}  // namespace rarelex::fewshot

#endif  // RARELEX_FEWSHOT_SAMPLER_H_
