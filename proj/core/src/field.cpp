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

#include "dickson_lab/field.hpp"

#include <string>

#include "dickson_lab/arith.hpp"
#include "dickson_lab/error.hpp"
#include "dickson_lab/polynomial.hpp"

namespace dickson_lab {

namespace {

std::uint32_t checked_order(std::uint32_t p, std::uint32_t m, std::uint64_t order_cap) {
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (m == 0) fail(ErrorCode::kDegreeZero, "extension degree must be at least 1");
  const auto order = checked_pow(p, m);
  if (!order || *order > order_cap || *order > 0xFFFFFFFFull) {
    fail(ErrorCode::kOrderCapExceeded, std::to_string(p) + "^" + std::to_string(m) + " exceeds the order cap " +
                                           std::to_string(order_cap));
  }
  return static_cast<std::uint32_t>(*order);
}

}  // namespace

void FieldTable::build_tables_from(const std::vector<std::uint32_t>& generator_coeffs) {
  const std::uint32_t p = spec_.p;
  const std::uint32_t m = spec_.m;
  const std::span<const std::uint32_t> f(spec_.modulus);

  digit_weight_.assign(m, 1);
  for (std::uint32_t i = 1; i < m; ++i) digit_weight_[i] = digit_weight_[i - 1] * p;

  const auto encode = [&](const poly::Poly& a) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < a.size(); ++i) code += a[i] * digit_weight_[i];
    return code;
  };

  const bool is_x = generator_coeffs == poly::Poly{0, 1} && m > 1;
  exp_.assign(group_order(), 0);
  log_.assign(order_, kNoLog);

  poly::Poly cur{1};
  for (std::uint32_t d = 0; d < group_order(); ++d) {
    const std::uint32_t code = encode(cur);
    if (code == 0 || log_[code] != kNoLog) {
      fail(ErrorCode::kInvalidGenerator, "element does not generate the multiplicative group");
    }
    exp_[d] = code;
    log_[code] = d;
    if (is_x) {
      // multiply by x: shift up and reduce the overflowing top coefficient
      cur.resize(m, 0);
      const std::uint64_t top = cur[m - 1];
      for (std::uint32_t i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        cur[i] = static_cast<std::uint32_t>((cur[i] + p - top * f[i] % p) % p);
      }
    } else {
      cur = poly::mul_mod(cur, generator_coeffs, f, p);
      cur.resize(m, 0);
    }
  }
  poly::trim(cur);
  if (cur != poly::Poly{1}) {
    fail(ErrorCode::kInvalidGenerator, "generator power cycle does not close at p^m - 1");
  }
  spec_.generator = encode(generator_coeffs);
}

FieldTable FieldTable::build(std::uint32_t p, std::uint32_t m, std::uint64_t order_cap) {
  const std::uint32_t order = checked_order(p, m, order_cap);

  std::vector<std::uint32_t> modulus(m + 1, 0);
  modulus[m] = 1;
  // scan monic polynomials by their low coefficients read as a base-p integer
  for (std::uint32_t idx = 0; idx < order; ++idx) {
    std::uint32_t rest = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      modulus[i] = rest % p;
      rest /= p;
    }
    if (!poly::is_primitive(modulus, p)) continue;

    FieldTable t;
    t.spec_ = FieldSpec{p, m, modulus, 0};
    t.order_ = order;
    // for m = 1 the class of x is the constant -c0
    poly::Poly x = poly::mod(poly::Poly{0, 1}, modulus, p);
    t.build_tables_from(x);
    return t;
  }
  fail(ErrorCode::kInternalAssertion, "no primitive polynomial found");
}

FieldTable FieldTable::from_spec(const FieldSpec& spec, std::uint64_t order_cap) {
  if (spec.modulus.size() != std::size_t{spec.m} + 1) {
    fail(ErrorCode::kInvalidSpec, "modulus must have m + 1 coefficients");
  }
  const std::uint32_t order = checked_order(spec.p, spec.m, order_cap);
  if (spec.modulus.back() != 1) fail(ErrorCode::kInvalidSpec, "modulus must be monic");
  for (const auto c : spec.modulus) {
    if (c >= spec.p) fail(ErrorCode::kInvalidSpec, "modulus coefficient out of range");
  }
  if (!poly::is_irreducible(spec.modulus, spec.p)) fail(ErrorCode::kInvalidSpec, "modulus is reducible");
  if (spec.generator == 0 || spec.generator >= order) {
    fail(ErrorCode::kInvalidGenerator, "generator code out of range");
  }

  FieldTable t;
  t.spec_ = FieldSpec{spec.p, spec.m, spec.modulus, 0};
  t.order_ = order;
  poly::Poly g(spec.m, 0);
  std::uint32_t rest = spec.generator;
  for (std::uint32_t i = 0; i < spec.m; ++i) {
    g[i] = rest % spec.p;
    rest /= spec.p;
  }
  poly::trim(g);
  t.build_tables_from(g);
  return t;
}

FieldTable FieldTable::with_generator(FieldElement g) const {
  check(g);
  const auto d = log(g);
  if (!d || gcd(*d, group_order()) != 1) {
    fail(ErrorCode::kInvalidGenerator, "code " + std::to_string(g.code) + " is not a generator");
  }
  FieldTable t = *this;
  t.spec_.generator = g.code;
  for (std::uint32_t i = 0; i < group_order(); ++i) {
    const auto code = exp_[static_cast<std::uint64_t>(*d) * i % group_order()];
    t.exp_[i] = code;
    t.log_[code] = i;
  }
  return t;
}

FieldTable FieldTable::with_generator_power(std::uint64_t exponent) const {
  if (gcd(exponent % group_order(), group_order()) != 1) {
    fail(ErrorCode::kInvalidGenerator,
         "exponent " + std::to_string(exponent) + " is not coprime to " + std::to_string(group_order()));
  }
  return with_generator(exp(exponent));
}

void FieldTable::check(FieldElement a) const {
  if (!contains(a)) {
    fail(ErrorCode::kInvalidCode, "code " + std::to_string(a.code) + " outside field of order " +
                                      std::to_string(order_));
  }
}

std::optional<std::uint32_t> FieldTable::log(FieldElement a) const {
  check(a);
  const auto d = log_[a.code];
  if (d == kNoLog) return std::nullopt;
  return d;
}

FieldElement FieldTable::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  const std::uint32_t p = spec_.p;
  if (p == 2) return FieldElement{a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0;
  for (std::uint32_t i = 0; i < spec_.m && (x | y) != 0; ++i) {
    std::uint32_t s = x % p + y % p;
    if (s >= p) s -= p;
    out += s * digit_weight_[i];
    x /= p;
    y /= p;
  }
  return FieldElement{out};
}

FieldElement FieldTable::neg(FieldElement a) const {
  check(a);
  const std::uint32_t p = spec_.p;
  if (p == 2) return a;
  std::uint32_t x = a.code, out = 0;
  for (std::uint32_t i = 0; i < spec_.m && x != 0; ++i) {
    const std::uint32_t c = x % p;
    if (c != 0) out += (p - c) * digit_weight_[i];
    x /= p;
  }
  return FieldElement{out};
}

FieldElement FieldTable::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.code == 0 || b.code == 0) return zero();
  return FieldElement{exp_[(std::uint64_t{log_[a.code]} + log_[b.code]) % group_order()]};
}

FieldElement FieldTable::inv(FieldElement a) const {
  check(a);
  if (a.code == 0) fail(ErrorCode::kDivisionByZero, "zero has no inverse");
  const std::uint32_t d = log_[a.code];
  return FieldElement{exp_[(group_order() - d) % group_order()]};
}

FieldElement FieldTable::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t n = group_order();
  return FieldElement{exp_[std::uint64_t{log_[a.code]} * (e % n) % n]};
}

FieldElement FieldTable::frobenius(FieldElement a, std::uint64_t s) const {
  check(a);
  if (a.code == 0) return a;
  const std::uint64_t n = group_order();
  const std::uint64_t twist = pow_mod(spec_.p, s, n);
  return FieldElement{exp_[std::uint64_t{log_[a.code]} * twist % n]};
}

std::vector<std::uint32_t> FieldTable::coefficients(FieldElement a) const {
  check(a);
  std::vector<std::uint32_t> out(spec_.m, 0);
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    out[i] = x % spec_.p;
    x /= spec_.p;
  }
  return out;
}

FieldElement FieldTable::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > spec_.m) fail(ErrorCode::kInvalidCode, "too many coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= spec_.p) fail(ErrorCode::kInvalidCode, "coefficient out of range");
    code += coeffs[i] * digit_weight_[i];
  }
  return FieldElement{code};
}

std::vector<FieldElement> FieldTable::additive_basis() const {
  std::vector<FieldElement> basis;
  basis.reserve(spec_.m);
  for (const auto w : digit_weight_) basis.push_back(FieldElement{w});
  return basis;
}

std::vector<FieldElement> fixed_field(const FieldTable& t, std::uint32_t s) {
  if (s == 0 || t.degree() % s != 0) {
    fail(ErrorCode::kNotADivisor, std::to_string(s) + " does not divide " + std::to_string(t.degree()));
  }
  std::vector<FieldElement> out;
  for (std::uint32_t code = 0; code < t.order(); ++code) {
    const FieldElement x{code};
    if (t.frobenius(x, s) == x) out.push_back(x);
  }
  return out;
}

GeneratedSubfield generated_subfield(const FieldTable& t, FieldElement a) {
  t.check(a);
  if (a.code == 0) fail(ErrorCode::kDivisionByZero, "generated subfield of zero is degenerate");
  for (std::uint32_t f = 1; f <= t.degree(); ++f) {
    if (t.frobenius(a, f) == a) return GeneratedSubfield{f, fixed_field(t, f)};
  }
  fail(ErrorCode::kInternalAssertion, "a^{p^m} != a");
}

}  // namespace dickson_lab
