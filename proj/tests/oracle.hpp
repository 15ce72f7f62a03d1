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

// Test-only reference arithmetic. Everything here works directly on
// coefficient vectors with schoolbook products and repeated multiplication,
// and never touches the library's log/exp tables or polynomial helpers.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace dickson_lab::oracle {

/// F_p[x]/(f) on element codes (base-p digits, constant term least significant).
class PolyField {
 public:
  PolyField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), f_(std::move(modulus)) {
    m_ = static_cast<std::uint32_t>(f_.size() - 1);
    order_ = 1;
    for (std::uint32_t i = 0; i < m_; ++i) order_ *= p_;
  }

  std::uint32_t order() const { return order_; }

  std::vector<std::uint64_t> digits(std::uint32_t code) const {
    std::vector<std::uint64_t> d(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  }

  std::uint32_t encode(const std::vector<std::uint64_t>& d) const {
    std::uint32_t code = 0, w = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      code += static_cast<std::uint32_t>(d[i] % p_) * w;
      w *= p_;
    }
    return code;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a);
    const auto y = digits(b);
    for (std::uint32_t i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a);
    const auto y = digits(b);
    std::vector<std::uint64_t> prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    // reduce from the top using x^m = -(f_0 + ... + f_{m-1} x^{m-1})
    for (std::uint32_t k = 2 * m_ - 1; k >= m_; --k) {
      const std::uint64_t c = prod[k];
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) {
        prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * f_[i]) % p_;
      }
      if (k == m_) break;
    }
    prod.resize(m_);
    return encode(prod);
  }

  /// a^e by repeated multiplication.
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Multiplicative order by stepping through powers.
  std::uint64_t mult_order(std::uint32_t a) const {
    std::uint32_t cur = a;
    std::uint64_t k = 1;
    while (cur != 1) {
      cur = mul(cur, a);
      ++k;
    }
    return k;
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> f_;
  std::uint32_t m_ = 0;
  std::uint32_t order_ = 0;
};

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Definition-level check of an admissible (q, n), by enumeration.
inline bool naive_dickson_pair(std::uint64_t q, std::uint64_t n) {
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return false;
  for (std::uint64_t r = 2; r <= n; ++r) {
    if (n % r == 0 && naive_is_prime(r) && (q - 1) % r != 0) return false;
  }
  return !(q % 4 == 3 && n % 4 == 0);
}

/// All admissible (q, n) with q^n <= max_order and n >= min_n, as a set.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> naive_pairs(std::uint64_t max_order, std::uint64_t min_n) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t q = 2; q <= max_order; ++q) {
    std::uint64_t power = 1;
    for (std::uint64_t n = 1;; ++n) {
      power *= q;
      if (power > max_order) break;
      if (n >= min_n && naive_dickson_pair(q, n)) out.emplace(q, n);
    }
  }
  return out;
}

}  // namespace dickson_lab::oracle
