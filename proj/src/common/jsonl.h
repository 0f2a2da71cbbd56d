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

#ifndef RARELEX_COMMON_JSONL_H_
#define RARELEX_COMMON_JSONL_H_

#include <string>
#include <string_view>

#include "common/error.h"
#include "common/text_io.h"
#include "json.hpp"

namespace rarelex {

using Json = nlohmann::ordered_json;

// Invokes fn(const Json&, size_t line_number) for every non-blank line of a
// JSONL file. Lines that are not JSON objects raise kParse with the line
// number.
template <typename Fn>
void ForEachJsonLine(const std::string& path, Fn&& fn) {
  LineReader reader(path);
  std::string line;
  while (reader.ReadLine(&line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(path + ":" + std::to_string(reader.line_number()) +
                       ": malformed JSON: " + e.what());
    }
    if (!value.is_object()) {
      throw ParseError(path + ":" + std::to_string(reader.line_number()) +
                       ": expected a JSON object");
    }
    fn(value, reader.line_number());
  }
}

// Compact single-line serialization followed by '\n'.
inline std::string ToJsonLine(const Json& value) {
  return value.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

inline std::string Where(const std::string& source, size_t line) {
  return source + ":" + std::to_string(line);
}

}  // namespace rarelex

#endif  // RARELEX_COMMON_JSONL_H_
