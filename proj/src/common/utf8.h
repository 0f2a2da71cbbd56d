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

#ifndef RARELEX_COMMON_UTF8_H_
#define RARELEX_COMMON_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace rarelex::utf8 {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at text[pos]. Malformed input decodes as
// U+FFFD and consumes its maximal subpart (one byte, or the valid prefix of a
// truncated sequence). Returns the number of bytes consumed (>= 1). Requires
// pos < text.size().
size_t Decode(std::string_view text, size_t pos, char32_t* cp);

void Append(char32_t cp, std::string* out);

// Replaces every invalid byte sequence with U+FFFD.
std::string Repair(std::string_view text);

bool IsValid(std::string_view text);

}  // namespace rarelex::utf8

#endif  // RARELEX_COMMON_UTF8_H_
