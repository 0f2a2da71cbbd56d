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

#ifndef RARELEX_SELECTOR_SELECTOR_H_
#define RARELEX_SELECTOR_SELECTOR_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "freqcount/frequency_table.h"
#include "lexicon/lexicon.h"
#include "selector/paraphrase_map.h"

namespace rarelex::selector {

// Why entries did not make it into the map. Each excluded entry is counted
// once, under the first rule it fails, checked in declaration order.
struct ExclusionCounts {
  uint64_t non_medical = 0;      // tag filter (SelectFromLexicon only)
  uint64_t not_single_word = 0;  // headword is not exactly one token
  uint64_t not_rare = 0;         // rule (a)
  uint64_t multi_gloss = 0;      // rule (b)
  uint64_t rare_gloss_token = 0; // rule (c)

  uint64_t total() const {
    return non_medical + not_single_word + not_rare + multi_gloss +
           rare_gloss_token;
  }
  bool operator==(const ExclusionCounts&) const = default;
};

struct Selection {
  ParaphraseMap map;
  ExclusionCounts exclusions;
  // Non-abbreviation headwords below the threshold, before rules (b)/(c).
  std::set<std::string> rare_words;
};

// `word` is a folded token; absent words count 0 and are therefore rare.
bool IsRare(const freqcount::FrequencyTable& table, std::string_view word,
            const SelectorConfig& config);

// Keeps an entry iff (a) its headword is rare or it is an abbreviation,
// (b) it has exactly one gloss and (c) the gloss has no rare token other
// than the headword itself. `medical` must already be tag-filtered and
// gloss-normalized.
Selection BuildParaphraseMap(const freqcount::FrequencyTable& table,
                             const std::vector<lexicon::DictionaryEntry>& medical,
                             const SelectorConfig& config);

// Tag filter + normalization + BuildParaphraseMap, with the tag filter's
// rejections reported under `non_medical`.
Selection SelectFromLexicon(const freqcount::FrequencyTable& table,
                            const std::vector<lexicon::DictionaryEntry>& raw,
                            const lexicon::MedicalTagPolicy& policy,
                            const SelectorConfig& config);

// Checks every map entry against the map invariants; returns one message per
// violation (empty when the map is sound).
std::vector<std::string> AuditMap(const ParaphraseMap& map,
                                  const freqcount::FrequencyTable& table);

std::string SerializeExclusions(const Selection& selection);

}  // namespace rarelex::selector

#endif  // RARELEX_SELECTOR_SELECTOR_H_
