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

#include "dickson_lab/error.hpp"

namespace dickson_lab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDegreeZero: return "DegreeZero";
    case ErrorCode::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::kInvalidCode: return "InvalidCode";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kInvalidGenerator: return "InvalidGenerator";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kZeroHasNoCoset: return "ZeroHasNoCoset";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace dickson_lab
