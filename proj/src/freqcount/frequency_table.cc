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

#include "freqcount/frequency_table.h"

#include <algorithm>
#include <charconv>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "common/error.h"
#include "common/text_io.h"
#include "freqcount/tokenizer.h"

namespace rarelex::freqcount {

FrequencyTable::FrequencyTable(CountMap counts,
                               std::vector<std::string> corpus_ids)
    : counts_(std::move(counts)), corpus_ids_(std::move(corpus_ids)) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second == 0) {
      it = counts_.erase(it);
    } else {
      total_tokens_ += it->second;
      ++it;
    }
  }
}

uint64_t FrequencyTable::Count(std::string_view token) const {
  const auto it = counts_.find(std::string(token));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, uint64_t>> FrequencyTable::SortedEntries()
    const {
  std::vector<std::pair<std::string, uint64_t>> entries(counts_.begin(),
                                                        counts_.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return entries;
}

void CountLine(std::string_view line, CountMap* counts) {
  TokenStream stream(line);
  while (stream.Next()) ++(*counts)[stream.folded()];
}

namespace {

// Bounded hand-off of line chunks from the reading thread to counters.
class ChunkQueue {
 public:
  explicit ChunkQueue(size_t capacity) : capacity_(capacity) {}

  void Push(std::vector<std::string> chunk) {
    std::unique_lock<std::mutex> lock(mu_);
    not_full_.wait(lock, [&] { return queue_.size() < capacity_; });
    queue_.push_back(std::move(chunk));
    not_empty_.notify_one();
  }

  bool Pop(std::vector<std::string>* chunk) {
    std::unique_lock<std::mutex> lock(mu_);
    not_empty_.wait(lock, [&] { return !queue_.empty() || closed_; });
    if (queue_.empty()) return false;
    *chunk = std::move(queue_.front());
    queue_.pop_front();
    not_full_.notify_one();
    return true;
  }

  void Close() {
    std::lock_guard<std::mutex> lock(mu_);
    closed_ = true;
    not_empty_.notify_all();
  }

 private:
  const size_t capacity_;
  std::mutex mu_;
  std::condition_variable not_empty_;
  std::condition_variable not_full_;
  std::deque<std::vector<std::string>> queue_;
  bool closed_ = false;
};

void MergeInto(const CountMap& from, CountMap* into) {
  for (const auto& [token, count] : from) (*into)[token] += count;
}

}  // namespace

FrequencyTable BuildTable(std::span<const std::string> corpus_paths,
                          const BuildOptions& options) {
  if (corpus_paths.empty()) throw InvalidArgument("empty corpus set");
  // Open everything up front so an unreadable path fails before any work.
  std::vector<std::unique_ptr<LineReader>> readers;
  readers.reserve(corpus_paths.size());
  for (const std::string& path : corpus_paths) {
    readers.push_back(std::make_unique<LineReader>(path));
  }

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const size_t chunk_lines = std::max<size_t>(1, options.chunk_lines);

  CountMap total;
  if (threads == 1) {
    std::string line;
    for (auto& reader : readers) {
      while (reader->ReadLine(&line)) CountLine(line, &total);
    }
  } else {
    ChunkQueue queue(2 * threads);
    std::vector<CountMap> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      workers.emplace_back([&queue, counts = &partial[i]] {
        std::vector<std::string> chunk;
        while (queue.Pop(&chunk)) {
          for (const std::string& line : chunk) CountLine(line, counts);
        }
      });
    }
    try {
      std::vector<std::string> chunk;
      std::string line;
      for (auto& reader : readers) {
        while (reader->ReadLine(&line)) {
          chunk.push_back(std::move(line));
          if (chunk.size() >= chunk_lines) {
            queue.Push(std::move(chunk));
            chunk.clear();
          }
        }
      }
      if (!chunk.empty()) queue.Push(std::move(chunk));
    } catch (...) {
      queue.Close();
      for (auto& w : workers) w.join();
      throw;
    }
    queue.Close();
    for (auto& w : workers) w.join();
    for (const CountMap& counts : partial) MergeInto(counts, &total);
  }
  return FrequencyTable(std::move(total), std::vector<std::string>(
                                              corpus_paths.begin(),
                                              corpus_paths.end()));
}

FrequencyTable Merge(const FrequencyTable& a, const FrequencyTable& b) {
  CountMap counts = a.counts();
  MergeInto(b.counts(), &counts);
  std::vector<std::string> ids = a.corpus_ids();
  ids.insert(ids.end(), b.corpus_ids().begin(), b.corpus_ids().end());
  return FrequencyTable(std::move(counts), std::move(ids));
}

double RelativeFrequency(const FrequencyTable& table, std::string_view word) {
  if (table.total_tokens() == 0) throw FailedPrecondition("empty table");
  return static_cast<double>(table.Count(Fold(word))) /
         static_cast<double>(table.total_tokens());
}

void WriteTable(const FrequencyTable& table, std::ostream& out) {
  out << "#total\t" << table.total_tokens() << '\n';
  for (const std::string& id : table.corpus_ids()) {
    out << "#corpus\t" << id << '\n';
  }
  for (const auto& [token, count] : table.SortedEntries()) {
    out << token << '\t' << count << '\n';
  }
}

std::string SerializeTable(const FrequencyTable& table) {
  std::ostringstream out;
  WriteTable(table, out);
  return out.str();
}

namespace {

uint64_t ParseCount(std::string_view text, const std::string& where) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(where + ": bad count '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FrequencyTable ReadTable(std::istream& in, const std::string& source) {
  std::string line;
  size_t line_no = 0;
  bool have_total = false;
  uint64_t declared_total = 0;
  std::vector<std::string> ids;
  CountMap counts;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(where + ": missing tab");
    const std::string_view key(line.data(), tab);
    const std::string_view value(line.data() + tab + 1, line.size() - tab - 1);
    if (!have_total) {
      if (key != "#total") throw ParseError(where + ": expected #total header");
      declared_total = ParseCount(value, where);
      have_total = true;
      continue;
    }
    if (key == "#corpus") {
      ids.emplace_back(value);
      continue;
    }
    if (!IsValidToken(key)) {
      throw ParseError(where + ": invalid token '" + std::string(key) + "'");
    }
    const uint64_t count = ParseCount(value, where);
    if (!counts.emplace(std::string(key), count).second) {
      throw ParseError(where + ": duplicate token '" + std::string(key) + "'");
    }
  }
  if (!have_total) throw ParseError(source + ": missing #total header");
  FrequencyTable table(std::move(counts), std::move(ids));
  if (table.total_tokens() != declared_total) {
    throw ParseError(source + ": #total " + std::to_string(declared_total) +
                     " does not match the sum of counts " +
                     std::to_string(table.total_tokens()));
  }
  return table;
}

void SaveTable(const FrequencyTable& table, const std::string& path) {
  WriteFile(path, SerializeTable(table));
}

FrequencyTable LoadTable(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return ReadTable(in, path);
}

}  // namespace rarelex::freqcount
