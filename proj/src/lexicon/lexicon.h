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

#ifndef RARELEX_LEXICON_LEXICON_H_
#define RARELEX_LEXICON_LEXICON_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rarelex::lexicon {

struct DictionaryEntry {
  std::string headword;
  std::vector<std::string> glosses;
  std::set<std::string> tags;  // lowercase
  bool is_abbreviation = false;

  bool operator==(const DictionaryEntry&) const = default;
};

// Tag substrings that mark an entry as medical. An entry is medical when any
// of its tags contains any of these substrings.
struct MedicalTagPolicy {
  std::vector<std::string> substrings;

  static MedicalTagPolicy Default();
  // Accepts "default" or a comma-separated list of substrings.
  static MedicalTagPolicy Parse(std::string_view spec);
  void Validate() const;
  bool Matches(const DictionaryEntry& entry) const;
};

// Reads the lexicon interchange format: one JSON object per line with
// "word", "glosses", "tags" and an optional "abbrev" flag. Lines sharing a
// headword are merged in input order.
std::vector<DictionaryEntry> ParseEntries(const std::string& path);

// Merges `more` into `entries` with the same rules ParseEntries applies to
// repeated headwords.
void MergeEntries(std::vector<DictionaryEntry>* entries,
                  std::vector<DictionaryEntry> more);

std::vector<DictionaryEntry> FilterMedical(
    const std::vector<DictionaryEntry>& entries,
    const MedicalTagPolicy& policy);

// Strips wiki links ("[[target|shown]]" -> "shown"), collapses whitespace,
// trims, and drops a single trailing period. Idempotent. Throws
// kInvalidArgument ("empty gloss") if nothing is left.
std::string NormalizeGloss(std::string_view gloss);

bool LooksLikeAbbreviation(std::string_view headword);

struct PrepareStats {
  size_t entries_in = 0;
  size_t non_medical = 0;
  size_t empty_glosses_dropped = 0;
  size_t duplicate_glosses_dropped = 0;
  size_t entries_without_gloss = 0;
  size_t entries_out = 0;
};

// Tag filter followed by gloss normalization. Glosses that normalize to
// nothing are dropped, identical normalized glosses are kept once, and
// entries left without any gloss are removed.
std::vector<DictionaryEntry> PrepareMedical(
    const std::vector<DictionaryEntry>& entries,
    const MedicalTagPolicy& policy, PrepareStats* stats = nullptr);

std::string SerializeEntries(const std::vector<DictionaryEntry>& entries);
void SaveEntries(const std::vector<DictionaryEntry>& entries,
                 const std::string& path);

}  // namespace rarelex::lexicon

#endif  // RARELEX_LEXICON_LEXICON_H_
