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

#include "dickson_lab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dickson_lab {

unsigned worker_count() {
  unsigned requested = 0;
  if (const char* env = std::getenv("DICKSON_LAB_THREADS")) {
    try {
      requested = static_cast<unsigned>(std::stoul(env));
    } catch (...) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return requested == 0 ? 1 : requested;
}

}  // namespace dickson_lab
