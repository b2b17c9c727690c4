// Copyright 2026 The Authors.
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

#ifndef SGGC_ERROR_H_
#define SGGC_ERROR_H_

#include <stdexcept>
#include <string>

namespace sggc {

enum class ErrorCode {
  kInvalidInput,  // malformed data, violated preconditions
  kIo,            // missing or unreadable files
  kNumerical,     // divergence, degenerate quantities
  kUsage,         // bad command-line or config values
};

// All library failures are reported by throwing Error. The CLI maps
// kNumerical to exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void Require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) Fail(code, message);
}

}  // namespace sggc

#endif  // SGGC_ERROR_H_
