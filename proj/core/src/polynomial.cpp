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

#include "dickson_lab/polynomial.hpp"

#include "dickson_lab/arith.hpp"
#include "dickson_lab/error.hpp"

namespace dickson_lab::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly mod(Poly a, std::span<const std::uint32_t> f, std::uint32_t p) {
  ensure(!f.empty() && f.back() == 1, "modulus must be monic");
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = lead * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, std::span<const std::uint32_t> f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return mod(std::move(prod), f, p);
}

Poly pow_mod(Poly base, std::uint64_t exp, std::span<const std::uint32_t> f, std::uint32_t p) {
  Poly result = mod(Poly{1}, f, p);
  base = mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

namespace {

// True when the monic divisor d divides f.
bool divides(const Poly& d, std::span<const std::uint32_t> f, std::uint32_t p) {
  return mod(Poly(f.begin(), f.end()), d, p).empty();
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t df = f.size() - 1;
  if (df == 1) return true;
  for (std::size_t d = 1; d <= df / 2; ++d) {
    // enumerate the p^d monic polynomials of degree d by their low coefficients
    const auto count = checked_pow(p, d);
    ensure(count.has_value(), "divisor enumeration overflow");
    Poly candidate(d + 1, 0);
    candidate[d] = 1;
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        candidate[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (divides(candidate, f, p)) return false;
    }
  }
  return true;
}

bool is_primitive(std::span<const std::uint32_t> f, std::uint32_t p) {
  if (f.size() < 2 || f[0] == 0) return false;
  if (!is_irreducible(f, p)) return false;
  const auto order = checked_pow(p, f.size() - 1);
  ensure(order.has_value(), "field order overflow");
  const std::uint64_t group = *order - 1;
  const Poly x{0, 1};
  const Poly one = mod(Poly{1}, f, p);
  if (pow_mod(x, group, f, p) != one) return false;
  for (const auto r : prime_divisors(group)) {
    if (pow_mod(x, group / r, f, p) == one) return false;
  }
  return true;
}

}  // namespace dickson_lab::poly
