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

#ifndef RARELEX_PIPELINE_PROTOCOL_H_
#define RARELEX_PIPELINE_PROTOCOL_H_

#include <string>
#include <string_view>
#include <vector>

namespace rarelex::pipeline {

// Scorer protocol check: every prompt id gets exactly one prediction, no
// prediction refers to an unknown id, and each record scores every
// candidate of its prompt (and nothing else) with a number.
struct ProtocolViolation {
  std::string id;  // example id, or "line N" when the record has none
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  size_t prompt_count = 0;
  size_t prediction_count = 0;
  std::vector<ProtocolViolation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(std::string_view kind) const;
  std::string ToString() const;
};

ValidationReport ValidateProtocol(const std::string& pred_path,
                                  const std::string& prompts_path);

}  // namespace rarelex::pipeline

#endif  // RARELEX_PIPELINE_PROTOCOL_H_
