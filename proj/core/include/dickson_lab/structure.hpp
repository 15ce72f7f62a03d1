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

// Brute-force structure scans over a Dickson nearfield: axiom checks, the
// multiplicative center and the distributive kernel.

#include <cstdint>
#include <string_view>
#include <vector>

#include "dickson_lab/nearfield.hpp"

namespace dickson_lab {

enum class ScanMode { kExhaustive, kSampled };

std::string_view scan_mode_name(ScanMode mode);

inline constexpr std::uint64_t kDefaultExhaustiveCap = 729;
inline constexpr std::uint64_t kDefaultKernelOracleCap = 343;

struct VerifyOptions {
  ScanMode mode = ScanMode::kExhaustive;
  /// Tuple budget per law in sampled mode.
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  /// Largest order for which triple loops run exhaustively.
  std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
  /// Largest order for which pair loops run exhaustively in sampled mode.
  std::uint64_t pair_cap = std::uint64_t{1} << 14;
};

/// Outcome of one law. For laws expected to hold the witness is a
/// counterexample. For right distributivity and commutativity it is the
/// lexicographically first failing tuple (by element codes) in an exhaustive
/// scan, or the first failing tuple of the seeded sample stream otherwise.
struct LawCheck {
  bool holds = true;
  ScanMode mode = ScanMode::kExhaustive;
  std::uint64_t checked = 0;
  std::vector<FieldElement> witness;
};

struct StructureReport {
  LawCheck additive_group;       // identity, inverses, commutativity, associativity
  LawCheck additive_exponent;    // p * a = 0 for every a (elementary abelian)
  LawCheck circle_associative;   // on all of R
  LawCheck circle_group;         // closure on R*, two-sided identity, two-sided inverses
  LawCheck left_distributive;    // a o (b + c) = a o b + a o c
  LawCheck right_distributive;   // (a + b) o c = a o c + b o c
  LawCheck circle_commutative;   // a o b = b o a
  ScanMode mode = ScanMode::kExhaustive;
  std::uint64_t seed = 0;

  /// The nearfield axioms proper.
  bool nearfield_axioms_hold() const;
  /// Axioms hold; right distributivity and commutativity fail with a witness
  /// when n >= 2 and hold when n = 1.
  bool as_expected(bool trivial_pair) const;
};

/// Throws CapExceeded in exhaustive mode when the order exceeds exhaustive_cap.
StructureReport verify_axioms(const DicksonNearfield& nf, const VerifyOptions& options = {});

/// {x : x o y = y o x for all y}, by commutant scan. Ascending by code.
std::vector<FieldElement> center(const DicksonNearfield& nf);

/// The subfield F_q = {x : x^q = x}. Ascending by code.
std::vector<FieldElement> center_formula(const DicksonNearfield& nf);

/// {l : (a + b) o l = a o l + b o l}, checking additivity of x -> x o l on
/// all x against an F_p-basis. Ascending by code.
std::vector<FieldElement> kernel(const DicksonNearfield& nf);

/// Same set from the definition over all pairs (a, b). Throws CapExceeded above cap.
std::vector<FieldElement> kernel_bruteforce(const DicksonNearfield& nf,
                                            std::uint64_t cap = kDefaultKernelOracleCap);

}  // namespace dickson_lab
