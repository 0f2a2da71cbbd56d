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

#include "lexicon/lexicon.h"

#include <algorithm>
#include <unordered_map>

#include "common/error.h"
#include "common/jsonl.h"
#include "common/text_io.h"

namespace rarelex::lexicon {

namespace {

constexpr const char* kAbbreviationTags[] = {"abbreviation", "initialism",
                                             "acronym"};

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// "[[a|b]]" -> "b", "[[a]]" -> "a". Brackets that do not form a link are
// left alone.
std::string StripWikiLinks(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 2, "[[") == 0) {
      const size_t close = s.find("]]", i + 2);
      if (close != std::string_view::npos) {
        std::string_view inner = s.substr(i + 2, close - i - 2);
        if (inner.find("[[") == std::string_view::npos) {
          const size_t bar = inner.rfind('|');
          if (bar != std::string_view::npos) inner = inner.substr(bar + 1);
          out.append(inner);
          i = close + 2;
          continue;
        }
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string NormalizeOnce(std::string_view s) {
  std::string out = CollapseWhitespace(StripWikiLinks(s));
  // A lone trailing period is sentence punctuation; "etc.." or "..." is not.
  if (!out.empty() && out.back() == '.' &&
      (out.size() < 2 || out[out.size() - 2] != '.')) {
    out.pop_back();
    while (!out.empty() && out.back() == ' ') out.pop_back();
  }
  return out;
}

std::vector<std::string> StringArray(const Json& obj, const char* field,
                                     const std::string& where) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(where + ": missing required field '" + field + "'");
  }
  if (!it->is_array()) {
    throw ParseError(where + ": field '" + field + "' must be an array");
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const Json& v : *it) {
    if (!v.is_string()) {
      throw ParseError(where + ": field '" + field +
                       "' must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

void MergeInto(DictionaryEntry* into, DictionaryEntry&& from) {
  into->glosses.insert(into->glosses.end(),
                       std::make_move_iterator(from.glosses.begin()),
                       std::make_move_iterator(from.glosses.end()));
  into->tags.insert(from.tags.begin(), from.tags.end());
  into->is_abbreviation = into->is_abbreviation || from.is_abbreviation;
}

void ApplyAbbreviationRule(DictionaryEntry* entry) {
  if (entry->is_abbreviation) return;
  for (const char* tag : kAbbreviationTags) {
    if (entry->tags.count(tag) > 0) {
      entry->is_abbreviation = true;
      return;
    }
  }
  entry->is_abbreviation = LooksLikeAbbreviation(entry->headword);
}

}  // namespace

MedicalTagPolicy MedicalTagPolicy::Default() {
  return {{"medical", "medicine", "disease", "symptom", "pharma"}};
}

MedicalTagPolicy MedicalTagPolicy::Parse(std::string_view spec) {
  if (spec == "default") return Default();
  MedicalTagPolicy policy;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string part = CollapseWhitespace(spec.substr(start, comma - start));
    if (!part.empty()) policy.substrings.push_back(AsciiLower(part));
    start = comma + 1;
  }
  policy.Validate();
  return policy;
}

void MedicalTagPolicy::Validate() const {
  if (substrings.empty()) throw InvalidArgument("tag policy is empty");
  for (const std::string& s : substrings) {
    if (s.empty()) throw InvalidArgument("tag policy has an empty substring");
    if (s != AsciiLower(s)) {
      throw InvalidArgument("tag policy substring '" + s +
                            "' is not lowercase");
    }
  }
}

bool MedicalTagPolicy::Matches(const DictionaryEntry& entry) const {
  for (const std::string& tag : entry.tags) {
    for (const std::string& needle : substrings) {
      if (tag.find(needle) != std::string::npos) return true;
    }
  }
  return false;
}

bool LooksLikeAbbreviation(std::string_view headword) {
  if (headword.size() < 2 || headword.size() > 6) return false;
  return std::all_of(headword.begin(), headword.end(),
                     [](char c) { return c >= 'A' && c <= 'Z'; });
}

void MergeEntries(std::vector<DictionaryEntry>* entries,
                  std::vector<DictionaryEntry> more) {
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < entries->size(); ++i) {
    index.emplace((*entries)[i].headword, i);
  }
  for (DictionaryEntry& e : more) {
    const auto [it, inserted] = index.emplace(e.headword, entries->size());
    if (inserted) {
      entries->push_back(std::move(e));
    } else {
      MergeInto(&(*entries)[it->second], std::move(e));
    }
  }
  for (DictionaryEntry& e : *entries) ApplyAbbreviationRule(&e);
}

std::vector<DictionaryEntry> ParseEntries(const std::string& path) {
  std::vector<DictionaryEntry> raw;
  ForEachJsonLine(path, [&](const Json& obj, size_t line) {
    const std::string where = Where(path, line);
    DictionaryEntry entry;
    const auto word = obj.find("word");
    if (word == obj.end()) {
      throw ParseError(where + ": missing required field 'word'");
    }
    if (!word->is_string() || word->get<std::string>().empty()) {
      throw ParseError(where + ": field 'word' must be a non-empty string");
    }
    entry.headword = word->get<std::string>();
    entry.glosses = StringArray(obj, "glosses", where);
    for (std::string& tag : StringArray(obj, "tags", where)) {
      entry.tags.insert(AsciiLower(tag));
    }
    if (const auto abbrev = obj.find("abbrev"); abbrev != obj.end()) {
      if (!abbrev->is_boolean()) {
        throw ParseError(where + ": field 'abbrev' must be a boolean");
      }
      entry.is_abbreviation = abbrev->get<bool>();
    }
    raw.push_back(std::move(entry));
  });
  std::vector<DictionaryEntry> entries;
  MergeEntries(&entries, std::move(raw));
  return entries;
}

std::vector<DictionaryEntry> FilterMedical(
    const std::vector<DictionaryEntry>& entries,
    const MedicalTagPolicy& policy) {
  policy.Validate();
  std::vector<DictionaryEntry> out;
  for (const DictionaryEntry& e : entries) {
    if (policy.Matches(e)) out.push_back(e);
  }
  return out;
}

std::string NormalizeGloss(std::string_view gloss) {
  // Each pass can expose another link or trailing period; iterate to the
  // fixed point so the result is stable under re-normalization.
  std::string current = NormalizeOnce(gloss);
  for (;;) {
    std::string next = NormalizeOnce(current);
    if (next == current) break;
    current = std::move(next);
  }
  if (current.empty()) throw InvalidArgument("empty gloss");
  return current;
}

std::vector<DictionaryEntry> PrepareMedical(
    const std::vector<DictionaryEntry>& entries,
    const MedicalTagPolicy& policy, PrepareStats* stats) {
  PrepareStats local;
  local.entries_in = entries.size();
  std::vector<DictionaryEntry> medical = FilterMedical(entries, policy);
  local.non_medical = entries.size() - medical.size();

  std::vector<DictionaryEntry> out;
  out.reserve(medical.size());
  for (DictionaryEntry& e : medical) {
    std::vector<std::string> glosses;
    for (const std::string& g : e.glosses) {
      std::string normalized;
      try {
        normalized = NormalizeGloss(g);
      } catch (const Error&) {
        ++local.empty_glosses_dropped;
        continue;
      }
      if (std::find(glosses.begin(), glosses.end(), normalized) !=
          glosses.end()) {
        ++local.duplicate_glosses_dropped;
        continue;
      }
      glosses.push_back(std::move(normalized));
    }
    if (glosses.empty()) {
      ++local.entries_without_gloss;
      continue;
    }
    e.glosses = std::move(glosses);
    out.push_back(std::move(e));
  }
  local.entries_out = out.size();
  if (stats != nullptr) *stats = local;
  return out;
}

std::string SerializeEntries(const std::vector<DictionaryEntry>& entries) {
  std::string out;
  for (const DictionaryEntry& e : entries) {
    Json obj;
    obj["word"] = e.headword;
    obj["glosses"] = e.glosses;
    obj["tags"] = Json::array();
    for (const std::string& t : e.tags) obj["tags"].push_back(t);
    obj["abbrev"] = e.is_abbreviation;
    out += ToJsonLine(obj);
  }
  return out;
}

void SaveEntries(const std::vector<DictionaryEntry>& entries,
                 const std::string& path) {
  WriteFile(path, SerializeEntries(entries));
}

}  // namespace rarelex::lexicon
