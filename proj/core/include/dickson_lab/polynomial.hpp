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

// Dense polynomials over F_p, coefficients listed constant term first.
// Only what modulus selection needs: reduction, products mod f, and the
// irreducibility / primitivity tests.

#include <cstdint>
#include <span>
#include <vector>

namespace dickson_lab::poly {

using Poly = std::vector<std::uint32_t>;

/// Strips leading zero coefficients. The zero polynomial becomes empty.
void trim(Poly& a);

/// Degree of a trimmed polynomial; -1 for zero.
int degree(const Poly& a);

/// a mod f over F_p; f must be monic.
Poly mod(Poly a, std::span<const std::uint32_t> f, std::uint32_t p);

/// a * b mod f over F_p; f must be monic.
Poly mul_mod(const Poly& a, const Poly& b, std::span<const std::uint32_t> f, std::uint32_t p);

/// base^exp mod f over F_p.
Poly pow_mod(Poly base, std::uint64_t exp, std::span<const std::uint32_t> f, std::uint32_t p);

/// Trial division of the monic f by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(std::span<const std::uint32_t> f, std::uint32_t p);

/// True when f is irreducible and the class of x has multiplicative order p^deg(f) - 1.
bool is_primitive(std::span<const std::uint32_t> f, std::uint32_t p);

}  // namespace dickson_lab::poly
