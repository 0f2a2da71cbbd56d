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

#ifndef RARELEX_SELECTOR_SWEEP_H_
#define RARELEX_SELECTOR_SWEEP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "augment/annotator.h"
#include "augment/dataset.h"
#include "freqcount/frequency_table.h"
#include "lexicon/lexicon.h"
#include "selector/selector.h"

namespace rarelex::selector {

struct SweepRow {
  uint64_t threshold = 0;
  size_t rare_words = 0;
  size_t map_size = 0;
  ExclusionCounts exclusions;
  // One entry per input dataset, in input order.
  std::vector<augment::AugmentStats> datasets;
};

struct SweepReport {
  std::vector<std::string> dataset_names;
  std::vector<SweepRow> rows;
};

// Builds one paraphrase map per threshold and counts the annotations it
// would produce on each dataset split. Thresholds must be non-empty and
// strictly increasing.
SweepReport SweepThresholds(const freqcount::FrequencyTable& table,
                            const std::vector<lexicon::DictionaryEntry>& medical,
                            const std::vector<uint64_t>& thresholds,
                            const std::vector<augment::Dataset>& datasets);

// "start:stop:step" (inclusive stop) or a comma-separated list.
std::vector<uint64_t> ParseThresholds(std::string_view spec);

// TSV: threshold, rare_words, map_size, the exclusion counters, then
// "<dataset>.<split>.distinct" / "<dataset>.<split>.total" per split.
std::string SerializeSweep(const SweepReport& report);

}  // namespace rarelex::selector

#endif  // RARELEX_SELECTOR_SWEEP_H_
