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

#include "augment/dataset.h"

#include <filesystem>
#include <sstream>
#include <unordered_set>

#include "common/error.h"
#include "common/jsonl.h"
#include "common/text_io.h"

namespace rarelex::augment {

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
  }
  return "?";
}

std::optional<Split> ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

std::string Label::DebugString() const {
  if (is_name()) return name();
  std::ostringstream out;
  out << score();
  return out.str();
}

size_t Dataset::CountSplit(Split split) const {
  size_t n = 0;
  for (const Example& e : examples) n += e.split == split;
  return n;
}

std::vector<const Example*> Dataset::Select(Split split) const {
  std::vector<const Example*> out;
  for (const Example& e : examples) {
    if (e.split == split) out.push_back(&e);
  }
  return out;
}

namespace {

const std::string& RequireString(const Json& obj, const char* field,
                                 const std::string& where) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(where + ": missing required field '" + field + "'");
  }
  if (!it->is_string()) {
    throw ParseError(where + ": field '" + field + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

Json ExampleToJson(const Example& e) {
  Json obj;
  obj["id"] = e.id;
  obj["sentence1"] = e.sentence1;
  obj["sentence2"] = e.sentence2;
  if (e.label.is_name()) {
    obj["label"] = e.label.name();
  } else {
    obj["label"] = e.label.score();
  }
  obj["split"] = std::string(SplitName(e.split));
  if (e.augmented) {
    obj["augmented"] = true;
    Json spans = Json::array();
    for (const AnnotationSpan& s : e.annotations) {
      Json span;
      span["sent"] = s.sentence_index;
      span["offset"] = s.byte_offset;
      span["word"] = s.matched_surface;
      span["inserted"] = s.inserted_text;
      spans.push_back(std::move(span));
    }
    obj["annotations"] = std::move(spans);
  }
  return obj;
}

}  // namespace

Dataset LoadDataset(const std::string& path) {
  Dataset ds;
  ds.name = std::filesystem::path(path).stem().string();
  std::unordered_set<std::string> ids;
  ForEachJsonLine(path, [&](const Json& obj, size_t line) {
    const std::string where = Where(path, line);
    Example e;
    e.id = RequireString(obj, "id", where);
    if (e.id.empty()) throw ParseError(where + ": empty id");
    e.sentence1 = RequireString(obj, "sentence1", where);
    e.sentence2 = RequireString(obj, "sentence2", where);
    const auto label = obj.find("label");
    if (label == obj.end()) {
      throw ParseError(where + ": missing required field 'label'");
    }
    if (label->is_string()) {
      e.label = Label(label->get<std::string>());
    } else if (label->is_number()) {
      e.label = Label(label->get<double>());
    } else {
      throw ParseError(where + ": field 'label' must be a string or number");
    }
    const std::string& split = RequireString(obj, "split", where);
    const auto parsed = ParseSplit(split);
    if (!parsed) {
      throw ParseError(where + ": unknown split '" + split +
                       "' (expected train, dev or test)");
    }
    e.split = *parsed;
    if (const auto aug = obj.find("augmented");
        aug != obj.end() && aug->is_boolean()) {
      e.augmented = aug->get<bool>();
    }
    if (const auto spans = obj.find("annotations");
        spans != obj.end() && spans->is_array()) {
      for (const Json& s : *spans) {
        AnnotationSpan span;
        span.sentence_index = s.value("sent", 1);
        span.byte_offset = s.value("offset", size_t{0});
        span.matched_surface = s.value("word", std::string());
        span.inserted_text = s.value("inserted", std::string());
        e.annotations.push_back(std::move(span));
      }
    }
    if (!ids.insert(e.id).second) {
      throw ParseError(where + ": duplicate id '" + e.id + "'");
    }
    ds.examples.push_back(std::move(e));
  });
  return ds;
}

std::string SerializeExamples(const std::vector<Example>& examples) {
  std::string out;
  for (const Example& e : examples) out += ToJsonLine(ExampleToJson(e));
  return out;
}

std::string SerializeDataset(const Dataset& dataset) {
  return SerializeExamples(dataset.examples);
}

void SaveDataset(const Dataset& dataset, const std::string& path) {
  WriteFile(path, SerializeDataset(dataset));
}

}  // namespace rarelex::augment
