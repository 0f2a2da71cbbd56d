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

#include "selector/sweep.h"

#include <charconv>
#include <sstream>

#include "common/error.h"

namespace rarelex::selector {

namespace {

uint64_t ParseUint(std::string_view text) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad threshold '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<uint64_t> ParseThresholds(std::string_view spec) {
  std::vector<uint64_t> out;
  if (spec.find(':') != std::string_view::npos) {
    const size_t a = spec.find(':');
    const size_t b = spec.find(':', a + 1);
    if (b == std::string_view::npos) {
      throw InvalidArgument("threshold range must be start:stop:step");
    }
    const uint64_t start = ParseUint(spec.substr(0, a));
    const uint64_t stop = ParseUint(spec.substr(a + 1, b - a - 1));
    const uint64_t step = ParseUint(spec.substr(b + 1));
    if (step == 0) throw InvalidArgument("threshold step must be positive");
    for (uint64_t t = start; t <= stop; t += step) out.push_back(t);
  } else {
    size_t start = 0;
    while (start <= spec.size()) {
      size_t comma = spec.find(',', start);
      if (comma == std::string_view::npos) comma = spec.size();
      out.push_back(ParseUint(spec.substr(start, comma - start)));
      start = comma + 1;
    }
  }
  return out;
}

SweepReport SweepThresholds(
    const freqcount::FrequencyTable& table,
    const std::vector<lexicon::DictionaryEntry>& medical,
    const std::vector<uint64_t>& thresholds,
    const std::vector<augment::Dataset>& datasets) {
  if (thresholds.empty()) throw InvalidArgument("no thresholds given");
  for (size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 1) throw InvalidArgument("threshold must be >= 1");
    if (i > 0 && thresholds[i] <= thresholds[i - 1]) {
      throw InvalidArgument("thresholds must be strictly increasing");
    }
  }
  SweepReport report;
  for (const auto& ds : datasets) report.dataset_names.push_back(ds.name);
  for (uint64_t threshold : thresholds) {
    Selection sel = BuildParaphraseMap(table, medical, {threshold});
    SweepRow row;
    row.threshold = threshold;
    row.rare_words = sel.rare_words.size();
    row.map_size = sel.map.size();
    row.exclusions = sel.exclusions;
    const augment::Annotator annotator(sel.map);
    for (const auto& ds : datasets) {
      row.datasets.push_back(augment::CountAnnotations(ds, annotator));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string SerializeSweep(const SweepReport& report) {
  std::ostringstream out;
  out << "threshold\trare_words\tmap_size\tnot_single_word\tnot_rare"
         "\tmulti_gloss\trare_gloss_token";
  // Column layout follows the splits present in the first row; every row
  // covers the same datasets so the layout is shared.
  if (!report.rows.empty()) {
    const SweepRow& first = report.rows.front();
    for (size_t d = 0; d < first.datasets.size(); ++d) {
      for (const auto& s : first.datasets[d].splits) {
        const std::string prefix = report.dataset_names[d] + "." +
                                   std::string(augment::SplitName(s.split));
        out << '\t' << prefix << ".distinct\t" << prefix << ".total";
      }
    }
  }
  out << '\n';
  for (const SweepRow& row : report.rows) {
    out << row.threshold << '\t' << row.rare_words << '\t' << row.map_size
        << '\t' << row.exclusions.not_single_word << '\t'
        << row.exclusions.not_rare << '\t' << row.exclusions.multi_gloss
        << '\t' << row.exclusions.rare_gloss_token;
    for (const auto& stats : row.datasets) {
      for (const auto& s : stats.splits) {
        out << '\t' << s.distinct_words << '\t' << s.total_annotations;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rarelex::selector
