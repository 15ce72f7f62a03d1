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

/**
 * @file nearfield.hpp
 * @brief The Dickson nearfield DN_g(q, n) = (F_{q^n}, +, o).
 *
 * Addition is the field addition. The product twists the right factor by a
 * Frobenius power selected by the coset of the left factor modulo
 * H = <g^n>:
 *
 *     a o b = a * b^{q^k}   where a lies in g^{[k]_q} H,
 *     0 o b = 0.
 *
 * For n = 1 every twist is the identity and the structure is the field.
 */

#include <cstdint>
#include <vector>

#include "dickson_lab/dickson.hpp"
#include "dickson_lab/field.hpp"

namespace dickson_lab {

struct NearfieldOptions {
  std::uint64_t order_cap = kDefaultOrderCap;
  /// The nearfield is built over the generator g^generator_exponent of the
  /// default field model. Must be coprime to q^n - 1.
  std::uint64_t generator_exponent = 1;
};

class DicksonNearfield {
 public:
  static DicksonNearfield build(const DicksonPair& pair, const NearfieldOptions& options = {});

  /// Uses an existing model of F_{q^n} (and its generator). Throws
  /// InvalidArgument if the field is not of order q^n over the right prime.
  static DicksonNearfield assemble(FieldTable field, const DicksonPair& pair);

  const FieldTable& field() const { return field_; }
  const DicksonPair& pair() const { return pair_; }
  const CosetIndexTable& cosets() const { return cosets_; }
  FieldElement generator() const { return field_.generator(); }
  std::uint32_t order() const { return field_.order(); }

  /// k in {1..n} with a in g^{[k]_q} H. Throws ZeroHasNoCoset for 0.
  std::uint32_t coset_index(FieldElement a) const;

  /// phi_a(b) = b^{q^k}, k = coset_index(a).
  FieldElement coupling(FieldElement a, FieldElement b) const;

  FieldElement circle(FieldElement a, FieldElement b) const {
    field_.check(a);
    field_.check(b);
    return FieldElement{circle_code(a.code, b.code)};
  }

  /// Two-sided inverse under o. Throws DivisionByZero for 0.
  FieldElement circle_inv(FieldElement a) const;

  /// Unchecked product on raw codes, for the exhaustive scans.
  std::uint32_t circle_code(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const auto log = field_.log_table();
    const std::uint64_t twisted = std::uint64_t{log[b]} * twist_[k_of_[a]];
    return field_.exp_table()[(log[a] + twisted) % field_.group_order()];
  }

 private:
  DicksonNearfield(FieldTable field, DicksonPair pair, CosetIndexTable cosets);

  FieldTable field_;
  DicksonPair pair_;
  CosetIndexTable cosets_;
  std::vector<std::uint32_t> k_of_;   // coset index per code, 0 for the zero code
  std::vector<std::uint64_t> twist_;  // q^k mod (q^n - 1), indexed by k
};

}  // namespace dickson_lab
