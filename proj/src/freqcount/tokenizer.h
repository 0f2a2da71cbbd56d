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

#ifndef RARELEX_FREQCOUNT_TOKENIZER_H_
#define RARELEX_FREQCOUNT_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rarelex::freqcount {

// Word segmentation shared by counting, gloss checks and annotation.
//
// A token is a maximal run of Unicode letters and decimal digits. Runs are
// joined across a single ASCII hyphen or apostrophe that sits between two
// letters/digits ("covid-19", "don't"). Everything else separates tokens.
// Tokens are reported both as byte ranges into the input and in their
// lowercase-folded form.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : text_(text) {}

  // Advances to the next token. Returns false at end of input.
  bool Next();

  // Resumes scanning at byte `pos` (must not be inside a code point).
  void SkipTo(size_t pos) { pos_ = pos; }

  size_t begin() const { return begin_; }
  size_t end() const { return end_; }
  std::string_view surface() const {
    return text_.substr(begin_, end_ - begin_);
  }
  const std::string& folded() const { return folded_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  size_t begin_ = 0;
  size_t end_ = 0;
  std::string folded_;
};

std::vector<std::string> Tokenize(std::string_view text);

// Lowercase fold of a single token-like string (no segmentation).
std::string Fold(std::string_view text);

// True iff `s` is non-empty, is a single token under the rules above and
// equals its own fold.
bool IsValidToken(std::string_view s);

// Returns the folded token if `text` segments to exactly one token spanning
// the whole input, or an empty string otherwise.
std::string AsSingleToken(std::string_view text);

}  // namespace rarelex::freqcount

#endif  // RARELEX_FREQCOUNT_TOKENIZER_H_
