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

#include "common/utf8.h"

namespace rarelex::utf8 {

size_t Decode(std::string_view text, size_t pos, char32_t* cp) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const size_t n = text.size();
  const unsigned char c0 = s[pos];
  if (c0 < 0x80) {
    *cp = c0;
    return 1;
  }
  // Well-formed sequences (Unicode Table 3-7): the lead byte fixes the length
  // and the allowed range of the second byte; later bytes are 80..BF.
  size_t len = 0;
  unsigned char lo = 0x80, hi = 0xBF;
  if (c0 >= 0xC2 && c0 <= 0xDF) {
    len = 2;
  } else if (c0 >= 0xE0 && c0 <= 0xEF) {
    len = 3;
    if (c0 == 0xE0) lo = 0xA0;
    if (c0 == 0xED) hi = 0x9F;
  } else if (c0 >= 0xF0 && c0 <= 0xF4) {
    len = 4;
    if (c0 == 0xF0) lo = 0x90;
    if (c0 == 0xF4) hi = 0x8F;
  } else {
    *cp = kReplacementChar;
    return 1;
  }
  char32_t value = c0 & (0x7F >> len);
  for (size_t i = 1; i < len; ++i) {
    if (pos + i >= n || s[pos + i] < lo || s[pos + i] > hi) {
      // Maximal subpart: the valid prefix becomes one replacement char.
      *cp = kReplacementChar;
      return i;
    }
    value = (value << 6) | (s[pos + i] & 0x3F);
    lo = 0x80;
    hi = 0xBF;
  }
  *cp = value;
  return len;
}

void Append(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

// A decoded U+FFFD is malformed input unless it was literally EF BF BD.
bool Malformed(std::string_view text, size_t pos, size_t len, char32_t cp) {
  return cp == kReplacementChar && text.substr(pos, len) != "\xEF\xBF\xBD";
}

}  // namespace

std::string Repair(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const size_t len = Decode(text, pos, &cp);
    if (Malformed(text, pos, len, cp)) {
      Append(kReplacementChar, &out);
    } else {
      out.append(text.substr(pos, len));
    }
    pos += len;
  }
  return out;
}

bool IsValid(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const size_t len = Decode(text, pos, &cp);
    if (Malformed(text, pos, len, cp)) {
      return false;
    }
    pos += len;
  }
  return true;
}

}  // namespace rarelex::utf8
