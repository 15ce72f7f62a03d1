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

#include "dickson_lab/arith.hpp"

#include <algorithm>
#include <limits>

#include "dickson_lab/error.hpp"

namespace dickson_lab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; n > 1 && d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto primes = prime_divisors(q);
  if (primes.size() != 1) return std::nullopt;
  const std::uint64_t p = primes.front();
  if (p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  std::uint32_t l = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++l;
  return PrimePower{static_cast<std::uint32_t>(p), l, q};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    result *= base;
    if (result == 0 || result == 1) {
      // 0^k and 1^k are fixed from here on
      return result;
    }
  }
  return result;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 0) fail(ErrorCode::kInvalidArgument, "pow_mod with zero modulus");
  __extension__ typedef unsigned __int128 u128;
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % modulus);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % modulus);
    exp >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace dickson_lab
