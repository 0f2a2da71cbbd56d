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

#ifndef RARELEX_SELECTOR_PARAPHRASE_MAP_H_
#define RARELEX_SELECTOR_PARAPHRASE_MAP_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rarelex::selector {

struct SelectorConfig {
  // A word is rare when its corpus count is strictly below this.
  uint64_t threshold = 200000;

  void Validate() const;
};

struct Paraphrase {
  std::string text;
  bool is_abbreviation = false;

  bool operator==(const Paraphrase&) const = default;
};

// Final headword -> paraphrase mapping. Headwords keep their dictionary
// surface form ("CHF", "afebrile").
struct ParaphraseMap {
  std::map<std::string, Paraphrase> entries;
  SelectorConfig config;
  std::string table_id;
  std::string lexicon_id;

  size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

// JSONL, one {"word","paraphrase","abbrev"} object per line, sorted by word.
std::string SerializeMap(const ParaphraseMap& map);
void SaveMap(const ParaphraseMap& map, const std::string& path);
ParaphraseMap LoadMap(const std::string& path);

}  // namespace rarelex::selector

#endif  // RARELEX_SELECTOR_PARAPHRASE_MAP_H_
