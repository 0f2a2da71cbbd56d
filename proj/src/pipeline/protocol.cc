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

#include "pipeline/protocol.h"

#include <set>
#include <unordered_map>

#include "common/error.h"
#include "common/jsonl.h"
#include "common/text_io.h"
#include "promptfmt/prompt.h"

namespace rarelex::pipeline {

bool ValidationReport::Has(std::string_view kind) const {
  for (const auto& v : violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

std::string ValidationReport::ToString() const {
  std::string out = "prompts: " + std::to_string(prompt_count) +
                    ", predictions: " + std::to_string(prediction_count) +
                    ", violations: " + std::to_string(violations.size()) +
                    "\n";
  for (const auto& v : violations) {
    out += v.id + "\t" + v.kind;
    if (!v.detail.empty()) out += "\t" + v.detail;
    out += "\n";
  }
  return out;
}

ValidationReport ValidateProtocol(const std::string& pred_path,
                                  const std::string& prompts_path) {
  ValidationReport report;
  const auto add = [&](std::string id, std::string kind, std::string detail) {
    report.violations.push_back(
        {std::move(id), std::move(kind), std::move(detail)});
  };

  std::vector<promptfmt::PromptRecord> prompts;
  try {
    prompts = promptfmt::LoadPrompts(prompts_path);
  } catch (const Error& e) {
    add("-", "bad prompts file", e.what());
    return report;
  }
  report.prompt_count = prompts.size();
  std::unordered_map<std::string, const promptfmt::PromptInstance*> by_id;
  for (const auto& p : prompts) {
    by_id.emplace(p.instance.example_id, &p.instance);
  }

  std::set<std::string> seen;
  try {
    LineReader reader(pred_path);
    std::string line;
    while (reader.ReadLine(&line)) {
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      ++report.prediction_count;
      const std::string where = "line " + std::to_string(reader.line_number());
      Json obj;
      try {
        obj = Json::parse(line);
      } catch (const Json::parse_error& e) {
        add(where, "malformed record", e.what());
        continue;
      }
      if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string()) {
        add(where, "malformed record", "missing string field 'id'");
        continue;
      }
      const std::string id = obj["id"].get<std::string>();
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        add(id, "unknown id", "");
        continue;
      }
      if (!seen.insert(id).second) {
        add(id, "duplicate prediction", "");
        continue;
      }
      if (!obj.contains("scores") || !obj["scores"].is_object() ||
          obj["scores"].empty()) {
        add(id, "malformed record", "missing or empty 'scores' object");
        continue;
      }
      const auto& candidates = it->second->candidate_tokens;
      const std::set<std::string> allowed(candidates.begin(), candidates.end());
      std::set<std::string> scored;
      for (const auto& [token, value] : obj["scores"].items()) {
        if (allowed.count(token) == 0) {
          add(id, "unknown candidate", token);
        } else if (!value.is_number()) {
          add(id, "non-numeric score", token);
        } else {
          scored.insert(token);
        }
      }
      std::string missing;
      for (const std::string& c : candidates) {
        if (scored.count(c) == 0 && obj["scores"].count(c) == 0) {
          if (!missing.empty()) missing += ",";
          missing += c;
        }
      }
      if (!missing.empty()) add(id, "incomplete candidates", missing);
    }
  } catch (const Error& e) {
    add("-", "bad prediction file", e.what());
    return report;
  }
  for (const auto& p : prompts) {
    if (seen.count(p.instance.example_id) == 0) {
      add(p.instance.example_id, "missing prediction", "");
    }
  }
  return report;
}

}  // namespace rarelex::pipeline
