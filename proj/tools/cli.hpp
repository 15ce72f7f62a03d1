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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dickson_lab::cli {

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // a mathematical check failed or a cap was hit
inline constexpr int kExitUsage = 2;        // malformed arguments or an invalid pair

enum class OutputFormat { kJson, kCsv, kText };

struct RunConfig {
  std::uint64_t order_cap = std::uint64_t{1} << 20;
  std::uint64_t exhaustive_cap = 729;
  std::uint64_t export_cap = 4096;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kJson;
};

/// Parses and runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dickson_lab::cli
