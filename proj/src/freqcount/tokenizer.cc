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

#include "freqcount/tokenizer.h"

#include <unicode/uchar.h>

#include "common/utf8.h"

namespace rarelex::freqcount {

namespace {

inline bool IsWordChar(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= '0' && cp <= '9');
  }
  return u_isalpha(static_cast<UChar32>(cp)) ||
         u_isdigit(static_cast<UChar32>(cp));
}

inline bool IsJoiner(char32_t cp) { return cp == '-' || cp == '\''; }

inline void AppendFolded(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>((cp >= 'A' && cp <= 'Z') ? cp + 32 : cp));
    return;
  }
  utf8::Append(static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))),
               out);
}

}  // namespace

bool TokenStream::Next() {
  const size_t n = text_.size();
  char32_t cp = 0;
  while (pos_ < n) {
    const size_t len = utf8::Decode(text_, pos_, &cp);
    if (IsWordChar(cp)) break;
    pos_ += len;
  }
  if (pos_ >= n) return false;

  begin_ = pos_;
  folded_.clear();
  for (;;) {
    const size_t len = utf8::Decode(text_, pos_, &cp);
    if (IsWordChar(cp)) {
      AppendFolded(cp, &folded_);
      pos_ += len;
    } else if (IsJoiner(cp) && pos_ + 1 < n) {
      char32_t next = 0;
      const size_t next_len = utf8::Decode(text_, pos_ + 1, &next);
      if (!IsWordChar(next)) break;
      folded_.push_back(static_cast<char>(cp));
      AppendFolded(next, &folded_);
      pos_ += 1 + next_len;
    } else {
      break;
    }
    if (pos_ >= n) break;
  }
  end_ = pos_;
  return true;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  TokenStream stream(text);
  while (stream.Next()) tokens.push_back(stream.folded());
  return tokens;
}

std::string Fold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    pos += utf8::Decode(text, pos, &cp);
    AppendFolded(cp, &out);
  }
  return out;
}

std::string AsSingleToken(std::string_view text) {
  TokenStream stream(text);
  if (!stream.Next()) return {};
  if (stream.begin() != 0 || stream.end() != text.size()) return {};
  std::string token = stream.folded();
  if (stream.Next()) return {};
  return token;
}

bool IsValidToken(std::string_view s) {
  if (s.empty()) return false;
  return AsSingleToken(s) == s;
}

}  // namespace rarelex::freqcount
