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

#include "common/text_io.h"

#include <filesystem>
#include <fstream>
#include <system_error>

#include "common/error.h"
#include "common/utf8.h"

namespace rarelex {

namespace {

constexpr size_t kChunkSize = 1 << 16;

bool NeedsRepair(std::string_view s) {
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) return !utf8::IsValid(s);
  }
  return false;
}

}  // namespace

LineReader::LineReader(const std::string& path) : path_(path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw IoError("cannot read '" + path + "': is a directory");
  }
  file_.reset(std::fopen(path.c_str(), "rb"));
  if (!file_) throw IoError("cannot open '" + path + "'");
  unsigned char magic[2] = {0, 0};
  const size_t got = std::fread(magic, 1, 2, file_.get());
  if (got == 2 && magic[0] == 0x1f && magic[1] == 0x8b) {
    file_.reset();
    gz_.reset(gzopen(path.c_str(), "rb"));
    if (!gz_) throw IoError("cannot open gzip stream '" + path + "'");
    gzbuffer(gz_.get(), kChunkSize);
  } else {
    std::rewind(file_.get());
  }
}

bool LineReader::Refill() {
  if (eof_) return false;
  if (buffer_pos_ > 0) {
    buffer_.erase(0, buffer_pos_);
    buffer_pos_ = 0;
  }
  const size_t old_size = buffer_.size();
  buffer_.resize(old_size + kChunkSize);
  long got;
  if (gz_) {
    got = gzread(gz_.get(), buffer_.data() + old_size, kChunkSize);
    if (got < 0) {
      int errnum = 0;
      const char* msg = gzerror(gz_.get(), &errnum);
      throw IoError("read error in '" + path_ + "': " + msg);
    }
  } else {
    got = static_cast<long>(
        std::fread(buffer_.data() + old_size, 1, kChunkSize, file_.get()));
    if (got == 0 && std::ferror(file_.get())) {
      throw IoError("read error in '" + path_ + "'");
    }
  }
  buffer_.resize(old_size + static_cast<size_t>(got));
  if (got == 0) eof_ = true;
  return got > 0;
}

bool LineReader::ReadLine(std::string* line) {
  size_t scan_from = buffer_pos_;
  for (;;) {
    const size_t nl = buffer_.find('\n', scan_from);
    if (nl != std::string::npos) {
      line->assign(buffer_, buffer_pos_, nl - buffer_pos_);
      buffer_pos_ = nl + 1;
      break;
    }
    // Refill() compacts the buffer, so the unscanned tail starts here.
    scan_from = buffer_.size() - buffer_pos_;
    if (!Refill()) {
      if (buffer_pos_ >= buffer_.size()) return false;
      line->assign(buffer_, buffer_pos_, std::string::npos);
      buffer_pos_ = buffer_.size();
      break;
    }
  }
  if (!line->empty() && line->back() == '\r') line->pop_back();
  if (NeedsRepair(*line)) *line = utf8::Repair(*line);
  ++line_number_;
  return true;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read error in '" + path + "'");
  return content;
}

void WriteFile(const std::string& path, std::string_view content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("write error on '" + path + "'");
}

bool FileExists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

}  // namespace rarelex
