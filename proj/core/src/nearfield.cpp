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

#include "dickson_lab/nearfield.hpp"

#include <string>
#include <utility>

#include "dickson_lab/arith.hpp"
#include "dickson_lab/error.hpp"

namespace dickson_lab {

DicksonNearfield::DicksonNearfield(FieldTable field, DicksonPair pair, CosetIndexTable cosets)
    : field_(std::move(field)), pair_(pair), cosets_(std::move(cosets)) {
  const std::uint32_t n = pair_.n();
  const std::uint64_t group = field_.group_order();

  twist_.assign(n + 1, 1 % group);
  for (std::uint32_t k = 1; k <= n; ++k) twist_[k] = pow_mod(pair_.q(), k, group);

  const auto log = field_.log_table();
  k_of_.assign(field_.order(), 0);
  for (std::uint32_t code = 1; code < field_.order(); ++code) {
    k_of_[code] = cosets_.k_for_residue(log[code] % n);
  }
}

DicksonNearfield DicksonNearfield::build(const DicksonPair& pair, const NearfieldOptions& options) {
  const auto order = checked_pow(pair.q(), pair.n());
  if (!order || *order > options.order_cap) {
    fail(ErrorCode::kOrderCapExceeded, "q^n exceeds the order cap " + std::to_string(options.order_cap));
  }
  FieldTable field = FieldTable::build(pair.p(), pair.l() * pair.n(), options.order_cap);
  if (options.generator_exponent != 1) field = field.with_generator_power(options.generator_exponent);
  return assemble(std::move(field), pair);
}

DicksonNearfield DicksonNearfield::assemble(FieldTable field, const DicksonPair& pair) {
  if (field.characteristic() != pair.p() || field.degree() != std::uint64_t{pair.l()} * pair.n()) {
    fail(ErrorCode::kInvalidArgument, "field is not F_{q^n} for the given pair");
  }
  auto cosets = CosetIndexTable::build(pair);
  return DicksonNearfield(std::move(field), pair, std::move(cosets));
}

std::uint32_t DicksonNearfield::coset_index(FieldElement a) const {
  field_.check(a);
  if (a.code == 0) fail(ErrorCode::kZeroHasNoCoset, "zero lies in no coset of H");
  return k_of_[a.code];
}

FieldElement DicksonNearfield::coupling(FieldElement a, FieldElement b) const {
  const std::uint32_t k = coset_index(a);
  return field_.frobenius(b, std::uint64_t{pair_.l()} * k);
}

FieldElement DicksonNearfield::circle_inv(FieldElement a) const {
  field_.check(a);
  if (a.code == 0) fail(ErrorCode::kDivisionByZero, "zero has no inverse under the twisted product");
  // a * x^{q^k} = 1  <=>  dlog x = -dlog a * q^{n-k}, since q^n = 1 mod (q^n - 1)
  const std::uint64_t group = field_.group_order();
  const std::uint32_t k = k_of_[a.code];
  const std::uint64_t neg_log = (group - field_.log_table()[a.code]) % group;
  const FieldElement x = field_.exp(neg_log * twist_[pair_.n() - k] % group);
  ensure(circle(a, x) == field_.one() && circle(x, a) == field_.one(), "twisted inverse is not two-sided");
  return x;
}

}  // namespace dickson_lab
