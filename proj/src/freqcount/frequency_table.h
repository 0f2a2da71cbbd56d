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

#ifndef RARELEX_FREQCOUNT_FREQUENCY_TABLE_H_
#define RARELEX_FREQCOUNT_FREQUENCY_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rarelex::freqcount {

using CountMap = std::unordered_map<std::string, uint64_t>;

// Exact token counts over a corpus collection. Immutable once built; the
// total always equals the sum of the counts.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  FrequencyTable(CountMap counts, std::vector<std::string> corpus_ids);

  // Count of an already folded token; 0 when absent.
  uint64_t Count(std::string_view token) const;

  uint64_t total_tokens() const { return total_tokens_; }
  size_t size() const { return counts_.size(); }
  const CountMap& counts() const { return counts_; }
  const std::vector<std::string>& corpus_ids() const { return corpus_ids_; }

  // Entries ordered by (count desc, token asc), the serialization order.
  std::vector<std::pair<std::string, uint64_t>> SortedEntries() const;

  // Compares counts only; corpus ids are provenance.
  bool SameCounts(const FrequencyTable& other) const {
    return total_tokens_ == other.total_tokens_ && counts_ == other.counts_;
  }

 private:
  CountMap counts_;
  uint64_t total_tokens_ = 0;
  std::vector<std::string> corpus_ids_;
};

struct BuildOptions {
  // Worker threads for counting; 0 picks the hardware concurrency.
  unsigned threads = 0;
  // Lines handed to a worker at a time.
  size_t chunk_lines = 1 << 14;
};

// Counts every token of every line of every file. The result does not depend
// on the thread count or chunk size.
FrequencyTable BuildTable(std::span<const std::string> corpus_paths,
                          const BuildOptions& options = {});

// Counts tokens of in-memory lines (single thread).
void CountLine(std::string_view line, CountMap* counts);

FrequencyTable Merge(const FrequencyTable& a, const FrequencyTable& b);

// counts[word] / total_tokens. `word` is folded before lookup.
double RelativeFrequency(const FrequencyTable& table, std::string_view word);

// TSV: "#total\tN", one "#corpus\tID" line per corpus, then "token\tcount"
// rows sorted by (count desc, token asc).
void WriteTable(const FrequencyTable& table, std::ostream& out);
std::string SerializeTable(const FrequencyTable& table);
FrequencyTable ReadTable(std::istream& in, const std::string& source);
void SaveTable(const FrequencyTable& table, const std::string& path);
FrequencyTable LoadTable(const std::string& path);

}  // namespace rarelex::freqcount

#endif  // RARELEX_FREQCOUNT_FREQUENCY_TABLE_H_
