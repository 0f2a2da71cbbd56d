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

#include "selector/paraphrase_map.h"

#include "common/error.h"
#include "common/jsonl.h"
#include "common/text_io.h"

namespace rarelex::selector {

void SelectorConfig::Validate() const {
  if (threshold < 1) throw InvalidArgument("threshold must be >= 1");
}

std::string SerializeMap(const ParaphraseMap& map) {
  std::string out;
  for (const auto& [word, p] : map.entries) {
    Json obj;
    obj["word"] = word;
    obj["paraphrase"] = p.text;
    obj["abbrev"] = p.is_abbreviation;
    out += ToJsonLine(obj);
  }
  return out;
}

void SaveMap(const ParaphraseMap& map, const std::string& path) {
  WriteFile(path, SerializeMap(map));
}

ParaphraseMap LoadMap(const std::string& path) {
  ParaphraseMap map;
  ForEachJsonLine(path, [&](const Json& obj, size_t line) {
    const std::string where = Where(path, line);
    const auto word = obj.find("word");
    const auto para = obj.find("paraphrase");
    if (word == obj.end() || !word->is_string()) {
      throw ParseError(where + ": missing required field 'word'");
    }
    if (para == obj.end() || !para->is_string()) {
      throw ParseError(where + ": missing required field 'paraphrase'");
    }
    Paraphrase p{para->get<std::string>(), false};
    if (const auto ab = obj.find("abbrev"); ab != obj.end()) {
      if (!ab->is_boolean()) {
        throw ParseError(where + ": field 'abbrev' must be a boolean");
      }
      p.is_abbreviation = ab->get<bool>();
    }
    if (word->get<std::string>().empty() || p.text.empty()) {
      throw ParseError(where + ": empty word or paraphrase");
    }
    if (!map.entries.emplace(word->get<std::string>(), std::move(p)).second) {
      throw ParseError(where + ": duplicate word '" +
                       word->get<std::string>() + "'");
    }
  });
  return map;
}

}  // namespace rarelex::selector
