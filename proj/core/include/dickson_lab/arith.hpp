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

// Small exact integer number theory used by the field and pair code.

#include <cstdint>
#include <optional>
#include <vector>

namespace dickson_lab {

/// q = p^l with p prime and l >= 1.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t l = 0;
  std::uint64_t q = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Deterministic trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order; empty for n <= 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Decomposes q as p^l, or nullopt when q is not a prime power (q < 2 included).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// base^exp mod modulus; modulus >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace dickson_lab
