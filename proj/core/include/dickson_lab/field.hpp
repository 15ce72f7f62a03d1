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
 * @file field.hpp
 * @brief Table-driven finite fields F_{p^m}.
 *
 * An element is stored as its code: the coefficient vector of the residue
 * polynomial read as a base-p integer, constant term as the least significant
 * digit. Code 0 is the additive zero and code 1 the multiplicative identity.
 * Addition works digit-wise on codes; multiplication, inversion and Frobenius
 * powers go through discrete-log tables relative to a fixed generator g.
 *
 * The default model of F_{p^m} uses the first primitive monic modulus in scan
 * order (low coefficients read as a base-p integer, ascending), so that the
 * class of x is the generator. A different generator can be swapped in with
 * FieldTable::with_generator.
 *
 * A FieldTable is immutable once built and can be shared between threads.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dickson_lab {

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Reproducible description of a field model.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> modulus;  // m + 1 coefficients, constant term first, monic
  std::uint32_t generator = 0;         // code of g

  bool operator==(const FieldSpec&) const = default;
};

class FieldTable {
 public:
  /// F_{p^m} with the first primitive modulus; g is the class of x.
  static FieldTable build(std::uint32_t p, std::uint32_t m, std::uint64_t order_cap = kDefaultOrderCap);

  /// Rebuilds a field from a serialized spec, checking irreducibility of the
  /// modulus and the order of the generator.
  static FieldTable from_spec(const FieldSpec& spec, std::uint64_t order_cap = kDefaultOrderCap);

  /// Same modulus, different generator. Throws InvalidGenerator unless g has order p^m - 1.
  FieldTable with_generator(FieldElement g) const;

  /// Same modulus with generator g^exponent; the exponent must be coprime to p^m - 1.
  FieldTable with_generator_power(std::uint64_t exponent) const;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.m; }
  std::uint32_t order() const { return order_; }
  /// p^m - 1, the order of the multiplicative group.
  std::uint32_t group_order() const { return order_ - 1; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement generator() const { return FieldElement{spec_.generator}; }

  bool contains(FieldElement a) const { return a.code < order_; }
  /// Throws InvalidCode for codes outside [0, p^m).
  void check(FieldElement a) const;

  /// Discrete log relative to g; zero has none.
  std::optional<std::uint32_t> log(FieldElement a) const;
  /// g^d with d reduced mod p^m - 1.
  FieldElement exp(std::uint64_t d) const { return FieldElement{exp_[d % group_order()]}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// a^{p^s}.
  FieldElement frobenius(FieldElement a, std::uint64_t s) const;

  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// The monomials 1, x, ..., x^{m-1}: an additive basis over F_p.
  std::vector<FieldElement> additive_basis() const;

  /// Raw tables, exposed for scans that want to skip per-call checks.
  std::span<const std::uint32_t> exp_table() const { return exp_; }
  std::span<const std::uint32_t> log_table() const { return log_; }

  /// log_table() entry for zero.
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

 private:
  FieldTable() = default;
  void build_tables_from(const std::vector<std::uint32_t>& generator_coeffs);

  FieldSpec spec_;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> digit_weight_;  // p^i
};

/// {x : x^{p^s} = x}, ascending by code. s must be a positive divisor of m.
std::vector<FieldElement> fixed_field(const FieldTable& t, std::uint32_t s);

struct GeneratedSubfield {
  std::uint32_t degree = 0;  // least f >= 1 with a^{p^f} = a
  std::vector<FieldElement> elements;
};

/// Smallest subfield containing F_p and a. Throws DivisionByZero for a = 0.
GeneratedSubfield generated_subfield(const FieldTable& t, FieldElement a);

}  // namespace dickson_lab
