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

#include "support/corpus_generator.h"

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "fewshot/splitmix64.h"

namespace rarelex::testing {

CorpusPlan LoadCorpusPlan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  uint64_t declared = 0;
  CorpusPlan plan;
  while (std::getline(in, line)) {
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    const std::string key = line.substr(0, tab);
    const uint64_t value = std::stoull(line.substr(tab + 1));
    if (key == "#total") {
      declared = value;
    } else {
      plan.emplace_back(key, value);
    }
  }
  uint64_t sum = 0;
  for (const auto& [word, count] : plan) sum += count;
  if (sum != declared) {
    throw std::runtime_error(path + ": counts sum to " + std::to_string(sum) +
                             ", header says " + std::to_string(declared));
  }
  return plan;
}

namespace {

class Sink {
 public:
  explicit Sink(const std::string& path) {
    std::filesystem::create_directories(
        std::filesystem::absolute(path).parent_path());
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
      gz_ = gzopen(path.c_str(), "wb");
      if (gz_ == nullptr) throw std::runtime_error("cannot write " + path);
    } else {
      file_ = std::fopen(path.c_str(), "wb");
      if (file_ == nullptr) throw std::runtime_error("cannot write " + path);
    }
  }
  ~Sink() {
    if (gz_ != nullptr) gzclose(gz_);
    if (file_ != nullptr) std::fclose(file_);
  }
  void Write(const std::string& s) {
    if (gz_ != nullptr) {
      gzwrite(gz_, s.data(), static_cast<unsigned>(s.size()));
    } else {
      std::fwrite(s.data(), 1, s.size(), file_);
    }
  }

 private:
  gzFile gz_ = nullptr;
  std::FILE* file_ = nullptr;
};

std::string Capitalized(const std::string& word) {
  std::string out = word;
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] -= 'a' - 'A';
  return out;
}

}  // namespace

void WriteCorpus(const CorpusPlan& plan, const std::vector<std::string>& paths,
                 uint64_t seed) {
  if (paths.empty()) throw std::invalid_argument("no output paths");
  std::vector<uint32_t> stream;
  for (uint32_t i = 0; i < plan.size(); ++i) {
    stream.insert(stream.end(), plan[i].second, i);
  }
  fewshot::SplitMix64 rng(seed);
  for (size_t i = stream.size(); i > 1; --i) {
    std::swap(stream[i - 1], stream[rng.UniformBelow(i)]);
  }
  const size_t per_file = (stream.size() + paths.size() - 1) / paths.size();
  size_t pos = 0;
  for (size_t f = 0; f < paths.size(); ++f) {
    Sink sink(paths[f]);
    const size_t end = std::min(stream.size(), pos + per_file);
    std::string line;
    while (pos < end) {
      const size_t n = std::min<size_t>(end - pos, 4 + rng.UniformBelow(15));
      line.clear();
      for (size_t i = 0; i < n; ++i) {
        const std::string& word = plan[stream[pos + i]].first;
        if (i == 0) {
          line += Capitalized(word);
        } else {
          line += rng.UniformBelow(9) == 0 ? ", " : " ";
          line += word;
        }
      }
      line += ".\n";
      sink.Write(line);
      pos += n;
    }
  }
}

CorpusPlan RandomPlan(uint64_t seed, size_t types, uint64_t max_count) {
  static const char* const kSpecial[] = {"café", "naïve", "x-ray", "o'brien",
                                         "straße", "covid-19", "ﬁnal"};
  fewshot::SplitMix64 rng(seed);
  CorpusPlan plan;
  for (size_t i = 0; i < types; ++i) {
    std::string word;
    if (i < std::size(kSpecial) && rng.UniformBelow(2) == 0) {
      word = kSpecial[i];
    } else {
      const size_t len = 1 + rng.UniformBelow(8);
      for (size_t j = 0; j < len; ++j) {
        word += static_cast<char>('a' + rng.UniformBelow(26));
      }
      word += std::to_string(i);
    }
    plan.emplace_back(word, 1 + rng.UniformBelow(max_count));
  }
  return plan;
}

}  // namespace rarelex::testing
