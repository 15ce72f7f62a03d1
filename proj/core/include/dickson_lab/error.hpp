// Copyright 2026 The dickson-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dickson_lab {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kDegreeZero,
  kOrderCapExceeded,
  kInvalidCode,
  kDivisionByZero,
  kNotADivisor,
  kOverflow,
  kInvalidPair,
  kInvalidGenerator,
  kInvalidSpec,
  kZeroHasNoCoset,
  kCapExceeded,
  kInternalAssertion,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

/// Internal invariant check that stays on in release builds.
inline void ensure(bool condition, const char* what) {
  if (!condition) {
    fail(ErrorCode::kInternalAssertion, what);
  }
}

}  // namespace dickson_lab
