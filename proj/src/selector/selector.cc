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

#include "selector/selector.h"

#include <sstream>
#include <unordered_set>

#include "common/error.h"
#include "freqcount/tokenizer.h"

namespace rarelex::selector {

using freqcount::FrequencyTable;
using lexicon::DictionaryEntry;

bool IsRare(const FrequencyTable& table, std::string_view word,
            const SelectorConfig& config) {
  return table.Count(word) < config.threshold;
}

namespace {

// First gloss token (other than `self`) that is rare, or empty.
std::string FirstRareGlossToken(const FrequencyTable& table,
                                std::string_view gloss, std::string_view self,
                                const SelectorConfig& config) {
  freqcount::TokenStream stream(gloss);
  while (stream.Next()) {
    if (stream.folded() == self) continue;
    if (IsRare(table, stream.folded(), config)) return stream.folded();
  }
  return {};
}

}  // namespace

Selection BuildParaphraseMap(const FrequencyTable& table,
                             const std::vector<DictionaryEntry>& medical,
                             const SelectorConfig& config) {
  config.Validate();
  if (table.total_tokens() == 0) {
    throw FailedPrecondition("frequency table is empty");
  }
  Selection sel;
  sel.map.config = config;
  std::unordered_set<std::string> seen;
  for (const DictionaryEntry& e : medical) {
    if (!seen.insert(e.headword).second) {
      throw InvalidArgument("duplicate headword '" + e.headword + "'");
    }
    const std::string token = freqcount::AsSingleToken(e.headword);
    if (token.empty()) {
      ++sel.exclusions.not_single_word;
      continue;
    }
    const bool rare = IsRare(table, token, config);
    if (rare && !e.is_abbreviation) sel.rare_words.insert(e.headword);
    if (!rare && !e.is_abbreviation) {
      ++sel.exclusions.not_rare;
      continue;
    }
    if (e.glosses.size() != 1) {
      ++sel.exclusions.multi_gloss;
      continue;
    }
    if (!FirstRareGlossToken(table, e.glosses.front(), token, config)
             .empty()) {
      ++sel.exclusions.rare_gloss_token;
      continue;
    }
    sel.map.entries.emplace(e.headword,
                            Paraphrase{e.glosses.front(), e.is_abbreviation});
  }
  return sel;
}

Selection SelectFromLexicon(const FrequencyTable& table,
                            const std::vector<DictionaryEntry>& raw,
                            const lexicon::MedicalTagPolicy& policy,
                            const SelectorConfig& config) {
  lexicon::PrepareStats stats;
  const auto medical = lexicon::PrepareMedical(raw, policy, &stats);
  Selection sel = BuildParaphraseMap(table, medical, config);
  sel.exclusions.non_medical = stats.non_medical;
  return sel;
}

std::vector<std::string> AuditMap(const ParaphraseMap& map,
                                  const FrequencyTable& table) {
  std::vector<std::string> problems;
  for (const auto& [word, p] : map.entries) {
    const std::string token = freqcount::AsSingleToken(word);
    if (token.empty()) {
      problems.push_back(word + ": headword is not a single token");
      continue;
    }
    if (p.text.empty()) problems.push_back(word + ": empty paraphrase");
    if (!p.is_abbreviation && !IsRare(table, token, map.config)) {
      problems.push_back(word + ": count " +
                         std::to_string(table.Count(token)) +
                         " is not below threshold " +
                         std::to_string(map.config.threshold));
    }
    const std::string rare =
        FirstRareGlossToken(table, p.text, token, map.config);
    if (!rare.empty()) {
      problems.push_back(word + ": paraphrase contains rare token '" + rare +
                         "'");
    }
  }
  return problems;
}

std::string SerializeExclusions(const Selection& selection) {
  const ExclusionCounts& x = selection.exclusions;
  std::ostringstream out;
  out << "rule\tcount\n"
      << "included\t" << selection.map.size() << '\n'
      << "rare_words\t" << selection.rare_words.size() << '\n'
      << "non_medical\t" << x.non_medical << '\n'
      << "not_single_word\t" << x.not_single_word << '\n'
      << "not_rare\t" << x.not_rare << '\n'
      << "multi_gloss\t" << x.multi_gloss << '\n'
      << "rare_gloss_token\t" << x.rare_gloss_token << '\n';
  return out.str();
}

}  // namespace rarelex::selector
