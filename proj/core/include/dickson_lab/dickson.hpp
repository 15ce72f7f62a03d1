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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dickson_lab/arith.hpp"
#include "dickson_lab/field.hpp"

namespace dickson_lab {

/// 1 + q + ... + q^{k-1}, summed term by term. Throws Overflow past 64 bits.
std::uint64_t bracket(std::uint64_t k, std::uint64_t q);

/// The first admissibility condition a candidate (q, n) violates.
enum class PairCondition {
  kNone,
  kPrimePower,      // (i)   q = p^l for a prime p
  kPrimeDivisors,   // (ii)  every prime divisor of n divides q - 1
  kNotFourModThree  // (iii) q = 3 mod 4 implies 4 does not divide n
};

/// "none", "i", "ii" or "iii".
std::string_view condition_label(PairCondition c);

struct PairValidation;

class DicksonPair {
 public:
  /// Throws InvalidPair naming the violated condition.
  static DicksonPair make(std::uint64_t q, std::uint32_t n);

  const PrimePower& base() const { return base_; }
  std::uint64_t q() const { return base_.q; }
  std::uint32_t p() const { return base_.p; }
  std::uint32_t l() const { return base_.l; }
  std::uint32_t n() const { return n_; }
  /// q^n, saturating at UINT64_MAX.
  std::uint64_t order() const { return order_; }
  /// n = 1: the construction gives back the field.
  bool trivial() const { return n_ == 1; }

  bool operator==(const DicksonPair&) const = default;

 private:
  DicksonPair(PrimePower base, std::uint32_t n, std::uint64_t order) : base_(base), n_(n), order_(order) {}
  friend PairValidation validate_pair(std::uint64_t q, std::uint64_t n);

  PrimePower base_;
  std::uint32_t n_ = 1;
  std::uint64_t order_ = 0;
};

struct PairValidation {
  PairCondition violated = PairCondition::kNone;
  std::optional<DicksonPair> pair;

  bool valid() const { return pair.has_value(); }
};

/// Total on q >= 2, n >= 1; throws InvalidArgument outside that domain.
PairValidation validate_pair(std::uint64_t q, std::uint64_t n);

/// All valid pairs with q^n <= max_order and n >= min_n, sorted by (q^n, q).
/// Throws CapExceeded when the prime-power sieve would pass 2^26 entries.
std::vector<DicksonPair> enumerate_pairs(std::uint64_t max_order, std::uint32_t min_n = 1);

/// Maps d = dlog(alpha) mod n to the k in {1..n} with alpha in g^{[k]_q} H,
/// H = <g^n>. Residue 0 maps to k = n.
class CosetIndexTable {
 public:
  /// Throws InternalAssertion if k -> [k]_q mod n is not a bijection.
  static CosetIndexTable build(const DicksonPair& pair);

  std::uint32_t n() const { return static_cast<std::uint32_t>(residue_to_k_.size()); }
  /// l, so that the coupling of coset k is the Frobenius power x -> x^{p^{l k}}.
  std::uint32_t frobenius_step() const { return step_; }
  std::uint32_t k_for_residue(std::uint32_t residue) const { return residue_to_k_.at(residue); }
  std::span<const std::uint32_t> residue_to_k() const { return residue_to_k_; }
  /// [k]_q mod n for k = 1..n (index k - 1).
  std::span<const std::uint32_t> brackets_mod_n() const { return brackets_mod_n_; }

 private:
  std::uint32_t step_ = 1;
  std::vector<std::uint32_t> residue_to_k_;
  std::vector<std::uint32_t> brackets_mod_n_;
};

/// k in {1..n} with alpha in g^{[k]_q} H. The field's order - 1 must be a multiple of n.
std::uint32_t coset_index(const FieldTable& t, const CosetIndexTable& ct, FieldElement alpha);

/// phi_alpha(beta) = beta^{q^k} for k = coset_index(alpha).
FieldElement apply_coupling(const FieldTable& t, const CosetIndexTable& ct, FieldElement alpha, FieldElement beta);

}  // namespace dickson_lab
