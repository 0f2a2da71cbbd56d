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

#ifndef RARELEX_COMMON_TEXT_IO_H_
#define RARELEX_COMMON_TEXT_IO_H_

#include <cstdio>
#include <memory>
#include <string>
#include <string_view>

#include <zlib.h>

namespace rarelex {

// Reads a text file line by line. Gzip input is recognised by its magic
// bytes, not by file extension. Each returned line has its terminator
// ("\n" or "\r\n") removed and invalid UTF-8 replaced with U+FFFD.
class LineReader {
 public:
  explicit LineReader(const std::string& path);

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  bool ReadLine(std::string* line);

  const std::string& path() const { return path_; }
  bool gzipped() const { return gz_ != nullptr; }
  // 1-based number of the line most recently returned.
  size_t line_number() const { return line_number_; }

 private:
  bool Refill();

  struct GzCloser {
    void operator()(gzFile f) const { gzclose(f); }
  };
  struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
  };

  std::string path_;
  std::unique_ptr<gzFile_s, GzCloser> gz_;
  std::unique_ptr<std::FILE, FileCloser> file_;
  std::string buffer_;
  size_t buffer_pos_ = 0;
  bool eof_ = false;
  size_t line_number_ = 0;
};

// Whole-file helpers. Both throw rarelex::Error(kIo) naming the path.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

bool FileExists(const std::string& path);

}  // namespace rarelex

#endif  // RARELEX_COMMON_TEXT_IO_H_
