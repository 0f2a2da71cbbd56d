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

#include "pipeline/mock_scorer.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "common/error.h"
#include "freqcount/tokenizer.h"

namespace rarelex::pipeline {

using promptfmt::kMaskMarker;

MockScorerPolicy::Mode MockScorerPolicy::ParseMode(std::string_view name) {
  if (name == "oracle") return Mode::kOracle;
  if (name == "lexical-overlap") return Mode::kLexicalOverlap;
  throw InvalidArgument("unknown mock scorer mode '" + std::string(name) +
                        "' (expected oracle or lexical-overlap)");
}

std::string_view MockScorerPolicy::ModeName(Mode mode) {
  return mode == Mode::kOracle ? "oracle" : "lexical-overlap";
}

void MockScorerPolicy::Validate() const {
  if (!(paraphrase_bonus >= 0.0) || std::isinf(paraphrase_bonus)) {
    throw InvalidArgument("paraphrase_bonus must be a finite value >= 0");
  }
}

namespace {

std::set<std::string> TokenSet(std::string_view text) {
  const auto tokens = freqcount::Tokenize(text);
  return {tokens.begin(), tokens.end()};
}

// log() that stays finite for a zero probability.
double SafeLog(double p) { return std::log(std::max(p, 1e-300)); }

}  // namespace

double LexicalOverlap(const promptfmt::PromptInstance& instance) {
  const std::string_view text(instance.rendered);
  const size_t mask = std::min(instance.mask_offset, text.size());
  const std::string_view left = text.substr(0, mask);
  const std::string_view right =
      text.substr(std::min(text.size(), mask + kMaskMarker.size()));
  const auto a = TokenSet(left);
  const auto b = TokenSet(right);
  if (a.empty() && b.empty()) return 1.0;
  size_t shared = 0;
  for (const std::string& t : a) shared += b.count(t);
  return static_cast<double>(shared) /
         static_cast<double>(a.size() + b.size() - shared);
}

evalstats::PredictionRecord MockScore(const promptfmt::PromptInstance& instance,
                                      const promptfmt::PromptTarget& gold,
                                      const MockScorerPolicy& policy) {
  evalstats::PredictionRecord out;
  out.example_id = instance.example_id;
  if (policy.mode == MockScorerPolicy::Mode::kOracle) {
    if (const auto* token = std::get_if<std::string>(&gold)) {
      for (const std::string& c : instance.candidate_tokens) {
        out.scores[c] = c == *token ? 1.0 : 0.0;
      }
    } else {
      const auto& pair = std::get<promptfmt::ProbabilityPair>(gold);
      for (const std::string& c : instance.candidate_tokens) {
        if (c == "Yes") {
          out.scores[c] = SafeLog(pair.yes);
        } else if (c == "No") {
          out.scores[c] = SafeLog(pair.no);
        } else {
          out.scores[c] = SafeLog(0.0);
        }
      }
    }
    return out;
  }
  const double overlap = LexicalOverlap(instance);
  const double parens = static_cast<double>(
      std::count(instance.rendered.begin(), instance.rendered.end(), '('));
  for (const std::string& c : instance.candidate_tokens) {
    if (c == "Yes") {
      out.scores[c] = overlap + policy.paraphrase_bonus * parens;
    } else if (c == "No") {
      out.scores[c] = 1.0 - overlap;
    } else {
      out.scores[c] = 0.5;
    }
  }
  return out;
}

std::vector<evalstats::PredictionRecord> MockScoreAll(
    const std::vector<promptfmt::PromptRecord>& prompts,
    const MockScorerPolicy& policy) {
  policy.Validate();
  std::vector<evalstats::PredictionRecord> out;
  out.reserve(prompts.size());
  for (const auto& p : prompts) {
    out.push_back(MockScore(p.instance, p.target, policy));
  }
  return out;
}

}  // namespace rarelex::pipeline
