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

#ifndef RARELEX_COMMON_ERROR_H_
#define RARELEX_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace rarelex {

// Mirrors rlx_status in the public C header; values must stay in sync.
enum class ErrorCode {
  kInvalidArgument = 1,
  kNotFound = 2,
  kIo = 3,
  kParse = 4,
  kFailedPrecondition = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error InvalidArgument(const std::string& message) {
  return Error(ErrorCode::kInvalidArgument, message);
}
inline Error IoError(const std::string& message) {
  return Error(ErrorCode::kIo, message);
}
inline Error ParseError(const std::string& message) {
  return Error(ErrorCode::kParse, message);
}
inline Error FailedPrecondition(const std::string& message) {
  return Error(ErrorCode::kFailedPrecondition, message);
}

}  // namespace rarelex

#endif  // RARELEX_COMMON_ERROR_H_
