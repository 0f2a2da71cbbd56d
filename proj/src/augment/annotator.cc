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

#include "augment/annotator.h"

#include <map>
#include <set>
#include <sstream>

#include "common/error.h"
#include "freqcount/tokenizer.h"

namespace rarelex::augment {

Annotator::Annotator(const selector::ParaphraseMap& map) {
  for (const auto& [word, p] : map.entries) {
    const std::string folded = freqcount::AsSingleToken(word);
    if (folded.empty()) {
      throw InvalidArgument("map headword '" + word +
                            "' is not a single word");
    }
    Target target{word, InsertionFor(p.text)};
    if (p.is_abbreviation) {
      by_surface_.emplace(word, std::move(target));
    } else {
      // std::map iteration is sorted, so the first spelling wins on a clash.
      by_fold_.emplace(folded, std::move(target));
    }
  }
}

const Annotator::Target* Annotator::Lookup(std::string_view surface,
                                           const std::string& folded) const {
  if (!by_surface_.empty()) {
    const auto it = by_surface_.find(std::string(surface));
    if (it != by_surface_.end()) return &it->second;
  }
  const auto it = by_fold_.find(folded);
  return it == by_fold_.end() ? nullptr : &it->second;
}

std::vector<AnnotationSpan> Annotator::FindMatches(std::string_view text,
                                                   int sentence_index) const {
  std::vector<AnnotationSpan> spans;
  freqcount::TokenStream stream(text);
  while (stream.Next()) {
    const Target* target = Lookup(stream.surface(), stream.folded());
    if (target == nullptr) continue;
    const size_t end = stream.end();
    const std::string_view rest = text.substr(end);
    if (rest.starts_with(target->inserted)) {
      stream.SkipTo(end + target->inserted.size());
      continue;
    }
    const size_t next = rest.find_first_not_of(' ');
    if (next != std::string_view::npos && rest[next] == '(') continue;
    spans.push_back(AnnotationSpan{sentence_index, end,
                                   std::string(stream.surface()),
                                   target->inserted, target->headword});
  }
  return spans;
}

Annotator::Result Annotator::Augment(std::string_view text,
                                     int sentence_index) const {
  Result result;
  result.spans = FindMatches(text, sentence_index);
  if (result.spans.empty()) {
    result.text.assign(text);
    return result;
  }
  size_t extra = 0;
  for (const auto& s : result.spans) extra += s.inserted_text.size();
  result.text.reserve(text.size() + extra);
  size_t pos = 0;
  for (const AnnotationSpan& s : result.spans) {
    result.text.append(text.substr(pos, s.byte_offset - pos));
    result.text.append(s.inserted_text);
    pos = s.byte_offset;
  }
  result.text.append(text.substr(pos));
  return result;
}

std::string StripAnnotations(std::string_view augmented,
                             std::span<const AnnotationSpan> spans) {
  std::string out;
  out.reserve(augmented.size());
  size_t read = 0;   // position in augmented
  size_t shift = 0;  // bytes inserted before `read`
  size_t last_offset = 0;
  for (const AnnotationSpan& s : spans) {
    if (s.byte_offset < last_offset) {
      throw InvalidArgument("annotation spans are not sorted by offset");
    }
    last_offset = s.byte_offset;
    const size_t at = s.byte_offset + shift;
    if (at < read || at > augmented.size() ||
        augmented.substr(at, s.inserted_text.size()) != s.inserted_text) {
      throw InvalidArgument("annotation at offset " +
                            std::to_string(s.byte_offset) +
                            " does not match the text");
    }
    out.append(augmented.substr(read, at - read));
    read = at + s.inserted_text.size();
    shift += s.inserted_text.size();
  }
  out.append(augmented.substr(read));
  return out;
}

const SplitStats* AugmentStats::Find(Split split) const {
  for (const SplitStats& s : splits) {
    if (s.split == split) return &s;
  }
  return nullptr;
}

namespace {

struct SplitAccumulator {
  size_t examples = 0;
  std::set<std::string> words;
  size_t total = 0;

  void Add(const std::vector<AnnotationSpan>& spans) {
    for (const AnnotationSpan& s : spans) words.insert(s.headword);
    total += spans.size();
  }
};

AugmentStats Finish(const std::map<Split, SplitAccumulator>& acc) {
  AugmentStats stats;
  for (Split split : kAllSplits) {
    const auto it = acc.find(split);
    if (it == acc.end()) continue;
    stats.splits.push_back(SplitStats{split, it->second.examples,
                                      it->second.words.size(),
                                      it->second.total});
  }
  return stats;
}

}  // namespace

AugmentResult AugmentDataset(const Dataset& dataset,
                             const selector::ParaphraseMap& map) {
  if (dataset.examples.empty()) throw InvalidArgument("empty dataset");
  const Annotator annotator(map);
  AugmentResult result;
  result.dataset.name = dataset.name;
  result.dataset.examples.reserve(dataset.examples.size());
  std::map<Split, SplitAccumulator> acc;
  for (const Example& in : dataset.examples) {
    Example out = in;
    auto first = annotator.Augment(in.sentence1, 1);
    auto second = annotator.Augment(in.sentence2, 2);
    out.sentence1 = std::move(first.text);
    out.sentence2 = std::move(second.text);
    out.augmented = true;
    out.annotations = std::move(first.spans);
    out.annotations.insert(out.annotations.end(),
                           std::make_move_iterator(second.spans.begin()),
                           std::make_move_iterator(second.spans.end()));
    SplitAccumulator& a = acc[in.split];
    ++a.examples;
    a.Add(out.annotations);
    result.dataset.examples.push_back(std::move(out));
  }
  result.stats = Finish(acc);
  return result;
}

AugmentStats CountAnnotations(const Dataset& dataset,
                              const Annotator& annotator) {
  std::map<Split, SplitAccumulator> acc;
  for (const Example& e : dataset.examples) {
    SplitAccumulator& a = acc[e.split];
    ++a.examples;
    a.Add(annotator.FindMatches(e.sentence1, 1));
    a.Add(annotator.FindMatches(e.sentence2, 2));
  }
  return Finish(acc);
}

std::string SerializeStats(const AugmentStats& stats) {
  std::ostringstream out;
  out << "split\texamples\tdistinct_words\ttotal_annotations\n";
  for (const SplitStats& s : stats.splits) {
    out << SplitName(s.split) << '\t' << s.examples << '\t'
        << s.distinct_words << '\t' << s.total_annotations << '\n';
  }
  return out.str();
}

}  // namespace rarelex::augment
