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

#include "promptfmt/prompt.h"

#include <algorithm>
#include <set>

#include "common/error.h"
#include "common/jsonl.h"
#include "common/text_io.h"

namespace rarelex::promptfmt {

namespace {

constexpr std::string_view kSent1 = "{sent1}";
constexpr std::string_view kSent2 = "{sent2}";
constexpr std::string_view kMask = "{mask}";

size_t CountOccurrences(std::string_view haystack, std::string_view needle) {
  size_t n = 0;
  for (size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

bool IsTerminalPunct(char c) { return c == '.' || c == '!' || c == '?'; }

std::string JoinLabels(const std::vector<Verbalizer>& v, bool tokens) {
  std::string out;
  for (const Verbalizer& x : v) {
    if (!out.empty()) out += ", ";
    out += tokens ? x.token : x.label;
  }
  return out;
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kMedNli ? "mednli" : "medsts";
}

Task ParseTask(std::string_view name) {
  if (name == "mednli") return Task::kMedNli;
  if (name == "medsts") return Task::kMedSts;
  throw InvalidArgument("unknown task '" + std::string(name) +
                        "' (expected mednli or medsts)");
}

PromptTemplate::PromptTemplate(std::string pattern,
                               std::vector<Verbalizer> verbalizers)
    : pattern_(std::move(pattern)), verbalizers_(std::move(verbalizers)) {
  Validate();
}

PromptTemplate PromptTemplate::ForTask(Task task) {
  if (task == Task::kMedNli) {
    return PromptTemplate("{sent1}. {mask}. {sent2}",
                          {{"entailment", "Yes"},
                           {"contradiction", "No"},
                           {"neutral", "maybe"}});
  }
  return PromptTemplate("{sent1}. {mask}. {sent2}",
                        {{"similar", "Yes"}, {"dissimilar", "No"}});
}

void PromptTemplate::Validate() const {
  for (std::string_view ph : {kSent1, kMask, kSent2}) {
    if (CountOccurrences(pattern_, ph) != 1) {
      throw InvalidArgument("template must contain " + std::string(ph) +
                            " exactly once");
    }
  }
  if (verbalizers_.empty()) throw InvalidArgument("template has no verbalizers");
  std::set<std::string> labels, tokens;
  for (const Verbalizer& v : verbalizers_) {
    if (v.label.empty() || v.token.empty()) {
      throw InvalidArgument("empty verbalizer label or token");
    }
    if (!labels.insert(v.label).second) {
      throw InvalidArgument("duplicate verbalizer label '" + v.label + "'");
    }
    if (!tokens.insert(v.token).second) {
      throw InvalidArgument("duplicate verbalizer token '" + v.token + "'");
    }
  }
}

std::vector<std::string> PromptTemplate::CandidateTokens() const {
  std::vector<std::string> out;
  for (const Verbalizer& v : verbalizers_) out.push_back(v.token);
  return out;
}

const std::string& PromptTemplate::Verbalize(std::string_view label) const {
  for (const Verbalizer& v : verbalizers_) {
    if (v.label == label) return v.token;
  }
  throw InvalidArgument("unknown label '" + std::string(label) +
                        "'; valid labels: " + JoinLabels(verbalizers_, false));
}

const std::string& PromptTemplate::Unverbalize(std::string_view token) const {
  for (const Verbalizer& v : verbalizers_) {
    if (v.token == token) return v.label;
  }
  throw InvalidArgument("unknown verbalizer token '" + std::string(token) +
                        "'; valid tokens: " + JoinLabels(verbalizers_, true));
}

PromptInstance RenderPrompt(const augment::Example& example,
                            const PromptTemplate& tpl) {
  tpl.Validate();
  if (example.sentence1.empty() || example.sentence2.empty()) {
    throw InvalidArgument("example '" + example.id + "' has an empty sentence");
  }
  if (example.sentence1.find(kMaskMarker) != std::string::npos ||
      example.sentence2.find(kMaskMarker) != std::string::npos) {
    throw InvalidArgument("example '" + example.id +
                          "' already contains the mask marker");
  }
  const std::string& pattern = tpl.pattern();
  PromptInstance out;
  out.example_id = example.id;
  out.candidate_tokens = tpl.CandidateTokens();
  size_t i = 0;
  while (i < pattern.size()) {
    const std::string_view rest = std::string_view(pattern).substr(i);
    if (rest.starts_with(kSent1)) {
      out.rendered += example.sentence1;
      i += kSent1.size();
      if (i < pattern.size() && IsTerminalPunct(pattern[i]) &&
          IsTerminalPunct(example.sentence1.back())) {
        ++i;
      }
    } else if (rest.starts_with(kSent2)) {
      out.rendered += example.sentence2;
      i += kSent2.size();
    } else if (rest.starts_with(kMask)) {
      out.mask_offset = out.rendered.size();
      out.rendered += kMaskMarker;
      i += kMask.size();
    } else {
      out.rendered.push_back(pattern[i]);
      ++i;
    }
  }
  return out;
}

ProbabilityPair ScoreToTarget(double score) {
  if (!(score >= 0.0 && score <= 5.0)) {
    throw InvalidArgument("similarity score " + std::to_string(score) +
                          " is outside [0, 5]");
  }
  const double yes = score / 5.0;
  return {yes, 1.0 - yes};
}

double PredictionToScore(double p_yes, double p_no) {
  if (!(p_yes >= 0.0) || !(p_no >= 0.0)) {
    throw InvalidArgument("probabilities must be non-negative");
  }
  if (p_yes + p_no <= 0.0) {
    throw InvalidArgument("probabilities sum to zero");
  }
  return 5.0 * p_yes / (p_yes + p_no);
}

void ValidateLabel(const augment::Example& example, Task task) {
  if (task == Task::kMedNli) {
    if (!example.label.is_name()) {
      throw InvalidArgument("example '" + example.id +
                            "': mednli label must be a string");
    }
    PromptTemplate::ForTask(task).Verbalize(example.label.name());
  } else {
    if (!example.label.is_score()) {
      throw InvalidArgument("example '" + example.id +
                            "': medsts label must be a number");
    }
    ScoreToTarget(example.label.score());
  }
}

PromptRecord FormatExample(const augment::Example& example, Task task) {
  const PromptTemplate tpl = PromptTemplate::ForTask(task);
  ValidateLabel(example, task);
  PromptRecord record;
  record.instance = RenderPrompt(example, tpl);
  if (task == Task::kMedNli) {
    record.target = tpl.Verbalize(example.label.name());
  } else {
    record.target = ScoreToTarget(example.label.score());
  }
  return record;
}

std::vector<PromptRecord> FormatDataset(const augment::Dataset& dataset,
                                        Task task,
                                        std::optional<augment::Split> only) {
  std::vector<PromptRecord> out;
  for (const augment::Example& e : dataset.examples) {
    if (only && e.split != *only) continue;
    out.push_back(FormatExample(e, task));
  }
  return out;
}

std::string SerializePrompts(const std::vector<PromptRecord>& prompts) {
  std::string out;
  for (const PromptRecord& p : prompts) {
    Json obj;
    obj["id"] = p.instance.example_id;
    obj["text"] = p.instance.rendered;
    obj["mask_offset"] = p.instance.mask_offset;
    obj["candidates"] = p.instance.candidate_tokens;
    if (const auto* token = std::get_if<std::string>(&p.target)) {
      obj["target"] = *token;
    } else {
      const auto& pair = std::get<ProbabilityPair>(p.target);
      obj["target"] = Json::array({pair.yes, pair.no});
    }
    out += ToJsonLine(obj);
  }
  return out;
}

void SavePrompts(const std::vector<PromptRecord>& prompts,
                 const std::string& path) {
  WriteFile(path, SerializePrompts(prompts));
}

std::vector<PromptRecord> LoadPrompts(const std::string& path) {
  std::vector<PromptRecord> out;
  ForEachJsonLine(path, [&](const Json& obj, size_t line) {
    const std::string where = Where(path, line);
    PromptRecord p;
    try {
      p.instance.example_id = obj.at("id").get<std::string>();
      p.instance.rendered = obj.at("text").get<std::string>();
      p.instance.mask_offset = obj.at("mask_offset").get<size_t>();
      p.instance.candidate_tokens =
          obj.at("candidates").get<std::vector<std::string>>();
      const Json& target = obj.at("target");
      if (target.is_string()) {
        p.target = target.get<std::string>();
      } else if (target.is_array() && target.size() == 2) {
        p.target = ProbabilityPair{target[0].get<double>(),
                                   target[1].get<double>()};
      } else {
        throw ParseError(where + ": bad target");
      }
    } catch (const Json::exception& e) {
      throw ParseError(where + ": malformed prompt record: " + e.what());
    }
    const std::string_view text(p.instance.rendered);
    if (p.instance.mask_offset > text.size() ||
        !text.substr(p.instance.mask_offset).starts_with(kMaskMarker)) {
      throw ParseError(where + ": mask_offset does not point at " +
                       std::string(kMaskMarker));
    }
    out.push_back(std::move(p));
  });
  return out;
}

}  // namespace rarelex::promptfmt
