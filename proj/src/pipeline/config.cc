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

#include "pipeline/config.h"

#include "common/error.h"
#include "common/text_io.h"
#include "fewshot/sampler.h"
#include "lexicon/lexicon.h"

namespace rarelex::pipeline {

namespace fs = std::filesystem;

namespace {

std::string Resolve(const Json& value, const fs::path& base,
                    const char* key) {
  if (!value.is_string() || value.get<std::string>().empty()) {
    throw InvalidArgument(std::string("config key '") + key +
                          "' must be a non-empty string");
  }
  const fs::path p(value.get<std::string>());
  return (p.is_absolute() ? p : base / p).lexically_normal().string();
}

template <typename T>
std::vector<T> NumberList(const Json& value, const char* key) {
  std::vector<T> out;
  const auto one = [&](const Json& v) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0) {
      throw InvalidArgument(std::string("config key '") + key +
                            "' must hold non-negative integers");
    }
    out.push_back(v.get<T>());
  };
  if (value.is_array()) {
    for (const Json& v : value) one(v);
  } else {
    one(value);
  }
  return out;
}

}  // namespace

void PipelineConfig::Apply(const Json& doc, const fs::path& base) {
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "corpus") {
      corpus.clear();
      if (value.is_array()) {
        for (const Json& v : value) corpus.push_back(Resolve(v, base, "corpus"));
      } else {
        corpus.push_back(Resolve(value, base, "corpus"));
      }
    } else if (key == "lexicon") {
      lexicon = Resolve(value, base, "lexicon");
    } else if (key == "dataset") {
      dataset = Resolve(value, base, "dataset");
    } else if (key == "out_dir") {
      out_dir = Resolve(value, base, "out_dir");
    } else if (key == "threshold") {
      if (!value.is_number_integer() || value.get<int64_t>() < 1) {
        throw InvalidArgument("config key 'threshold' must be an integer >= 1");
      }
      threshold = value.get<uint64_t>();
    } else if (key == "task") {
      task = promptfmt::ParseTask(value.get<std::string>());
    } else if (key == "k") {
      k_values = NumberList<size_t>(value, "k");
    } else if (key == "seeds") {
      seeds = NumberList<uint64_t>(value, "seeds");
    } else if (key == "scorer") {
      scorer = value.get<std::string>();
    } else if (key == "scorer_cmd") {
      scorer_command = value.get<std::string>();
    } else if (key == "mock_mode") {
      mock.mode = MockScorerPolicy::ParseMode(value.get<std::string>());
    } else if (key == "paraphrase_bonus") {
      mock.paraphrase_bonus = value.get<double>();
    } else if (key == "tags_policy") {
      if (value.is_array()) {
        tags_policy = value.get<std::vector<std::string>>();
      } else {
        tags_policy =
            lexicon::MedicalTagPolicy::Parse(value.get<std::string>())
                .substrings;
      }
    } else if (key == "full") {
      full = value.get<bool>();
    } else if (key == "augment") {
      augment = value.get<bool>();
    } else if (key == "threads") {
      threads = value.get<unsigned>();
    } else {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
}

void PipelineConfig::Validate() const {
  if (corpus.empty()) throw InvalidArgument("config: no corpus files");
  if (lexicon.empty()) throw InvalidArgument("config: no lexicon");
  if (dataset.empty()) throw InvalidArgument("config: no dataset");
  if (out_dir.empty()) throw InvalidArgument("config: no out_dir");
  if (threshold < 1) throw InvalidArgument("config: threshold must be >= 1");
  if (k_values.empty()) throw InvalidArgument("config: no k values");
  if (seeds.empty()) throw InvalidArgument("config: no seeds");
  for (size_t k : k_values) {
    fewshot::SamplePlan plan{task, k, seeds, full};
    plan.Validate();
  }
  if (scorer == "external") {
    if (scorer_command.empty()) {
      throw InvalidArgument("config: scorer 'external' needs scorer_cmd");
    }
  } else if (scorer != "mock") {
    throw InvalidArgument("config: scorer must be 'mock' or 'external'");
  }
  mock.Validate();
  lexicon::MedicalTagPolicy{tags_policy}.Validate();
}

Json PipelineConfig::ToJson() const {
  Json doc;
  doc["corpus"] = corpus;
  doc["lexicon"] = lexicon;
  doc["dataset"] = dataset;
  doc["out_dir"] = out_dir;
  doc["threshold"] = threshold;
  doc["task"] = std::string(promptfmt::TaskName(task));
  doc["k"] = k_values;
  doc["seeds"] = seeds;
  doc["scorer"] = scorer;
  if (!scorer_command.empty()) doc["scorer_cmd"] = scorer_command;
  doc["mock_mode"] = std::string(MockScorerPolicy::ModeName(mock.mode));
  doc["paraphrase_bonus"] = mock.paraphrase_bonus;
  doc["tags_policy"] = tags_policy;
  doc["full"] = full;
  doc["augment"] = augment;
  doc["threads"] = threads;
  return doc;
}

PipelineConfig LoadConfig(const std::string& path, const Json& overrides) {
  PipelineConfig cfg;
  if (!path.empty()) {
    Json doc;
    try {
      doc = Json::parse(ReadFile(path));
    } catch (const Json::parse_error& e) {
      throw ParseError(path + ": malformed config: " + e.what());
    }
    try {
      cfg.Apply(doc, fs::absolute(path).parent_path());
    } catch (const Json::exception& e) {
      throw InvalidArgument(path + ": " + e.what());
    }
  }
  if (!overrides.is_null()) {
    try {
      cfg.Apply(overrides, fs::current_path());
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("bad override: ") + e.what());
    }
  }
  return cfg;
}

}  // namespace rarelex::pipeline
