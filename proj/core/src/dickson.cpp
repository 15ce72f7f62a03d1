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

#include "dickson_lab/dickson.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dickson_lab/error.hpp"

namespace dickson_lab {

std::uint64_t bracket(std::uint64_t k, std::uint64_t q) {
  if (k < 1 || q < 2) fail(ErrorCode::kInvalidArgument, "bracket needs k >= 1 and q >= 2");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (sum > kMax - term) fail(ErrorCode::kOverflow, "[" + std::to_string(k) + "]_" + std::to_string(q));
    sum += term;
    if (i + 1 < k) {
      if (term > kMax / q) fail(ErrorCode::kOverflow, "[" + std::to_string(k) + "]_" + std::to_string(q));
      term *= q;
    }
  }
  return sum;
}

std::string_view condition_label(PairCondition c) {
  switch (c) {
    case PairCondition::kNone: return "none";
    case PairCondition::kPrimePower: return "i";
    case PairCondition::kPrimeDivisors: return "ii";
    case PairCondition::kNotFourModThree: return "iii";
  }
  return "?";
}

PairValidation validate_pair(std::uint64_t q, std::uint64_t n) {
  if (q < 2 || n < 1) fail(ErrorCode::kInvalidArgument, "pair needs q >= 2 and n >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max()) fail(ErrorCode::kInvalidArgument, "n out of range");

  const auto base = as_prime_power(q);
  if (!base) return {PairCondition::kPrimePower, std::nullopt};
  for (const auto r : prime_divisors(n)) {
    if ((q - 1) % r != 0) return {PairCondition::kPrimeDivisors, std::nullopt};
  }
  if (q % 4 == 3 && n % 4 == 0) return {PairCondition::kNotFourModThree, std::nullopt};

  const auto order = checked_pow(q, n).value_or(std::numeric_limits<std::uint64_t>::max());
  return {PairCondition::kNone, DicksonPair(*base, static_cast<std::uint32_t>(n), order)};
}

DicksonPair DicksonPair::make(std::uint64_t q, std::uint32_t n) {
  auto v = validate_pair(q, n);
  if (!v.pair) {
    fail(ErrorCode::kInvalidPair, "(" + std::to_string(q) + ", " + std::to_string(n) + ") violates condition " +
                                      std::string(condition_label(v.violated)));
  }
  return *v.pair;
}

std::vector<DicksonPair> enumerate_pairs(std::uint64_t max_order, std::uint32_t min_n) {
  std::vector<DicksonPair> out;
  if (max_order < 2) return out;
  // with n >= 2 only bases up to sqrt(max_order) can contribute
  std::uint64_t q_limit = max_order;
  if (min_n >= 2) {
    q_limit = 1;
    while ((q_limit + 1) <= max_order / (q_limit + 1)) ++q_limit;
  }
  constexpr std::uint64_t kSieveCap = std::uint64_t{1} << 26;
  if (q_limit > kSieveCap) fail(ErrorCode::kCapExceeded, "pair enumeration range too large");

  // smallest-prime-factor sieve; q is a prime power iff dividing out spf(q) leaves 1
  std::vector<std::uint32_t> spf(q_limit + 1, 0);
  for (std::uint64_t i = 2; i <= q_limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= q_limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }

  for (std::uint64_t q = 2; q <= q_limit; ++q) {
    std::uint64_t rest = q;
    while (rest % spf[q] == 0) rest /= spf[q];
    if (rest != 1) continue;
    std::uint64_t power = q;
    for (std::uint32_t n = 1; power <= max_order; ++n) {
      if (n >= min_n) {
        if (auto v = validate_pair(q, n); v.pair) out.push_back(*v.pair);
      }
      if (power > max_order / q) break;
      power *= q;
    }
  }
  std::sort(out.begin(), out.end(), [](const DicksonPair& a, const DicksonPair& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.q() < b.q();
  });
  return out;
}

CosetIndexTable CosetIndexTable::build(const DicksonPair& pair) {
  const std::uint32_t n = pair.n();
  const std::uint64_t q_mod = pair.q() % n;
  CosetIndexTable ct;
  ct.step_ = pair.l();
  ct.residue_to_k_.assign(n, 0);
  ct.brackets_mod_n_.reserve(n);

  // [k+1]_q = [k]_q + q^k, tracked mod n
  std::uint64_t b = 0;
  std::uint64_t term = 1 % n;
  for (std::uint32_t k = 1; k <= n; ++k) {
    b = (b + term) % n;
    term = term * q_mod % n;
    ct.brackets_mod_n_.push_back(static_cast<std::uint32_t>(b));
    ensure(ct.residue_to_k_[b] == 0, "k -> [k]_q mod n is not injective");
    ct.residue_to_k_[b] = k;
  }
  // n | [n]_q, i.e. g^{[n]_q} H = H
  ensure(ct.residue_to_k_[0] == n, "n does not divide [n]_q");
  return ct;
}

std::uint32_t coset_index(const FieldTable& t, const CosetIndexTable& ct, FieldElement alpha) {
  const auto d = t.log(alpha);
  if (!d) fail(ErrorCode::kZeroHasNoCoset, "zero lies in no coset of H");
  const std::uint32_t n = ct.n();
  if (t.group_order() % n != 0) {
    fail(ErrorCode::kInvalidArgument, "coset table does not match the field: n does not divide p^m - 1");
  }
  const std::uint32_t k = ct.k_for_residue(*d % n);
  // alpha * g^{-[k]_q} must land in H = <g^n>
  const std::uint32_t bk = ct.brackets_mod_n()[k - 1];
  ensure((*d % n + n - bk) % n == 0, "coset representative check failed");
  return k;
}

FieldElement apply_coupling(const FieldTable& t, const CosetIndexTable& ct, FieldElement alpha, FieldElement beta) {
  const std::uint32_t k = coset_index(t, ct, alpha);
  return t.frobenius(beta, std::uint64_t{ct.frobenius_step()} * k);
}

}  // namespace dickson_lab
