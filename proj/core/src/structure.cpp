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

#include "dickson_lab/structure.hpp"

#include <atomic>
#include <limits>
#include <random>
#include <string>

#include "dickson_lab/error.hpp"
#include "dickson_lab/parallel.hpp"

namespace dickson_lab {

std::string_view scan_mode_name(ScanMode mode) {
  return mode == ScanMode::kExhaustive ? "exhaustive" : "sampled";
}

bool StructureReport::nearfield_axioms_hold() const {
  return additive_group.holds && additive_exponent.holds && circle_associative.holds && circle_group.holds &&
         left_distributive.holds;
}

bool StructureReport::as_expected(bool trivial_pair) const {
  if (!nearfield_axioms_hold()) return false;
  if (trivial_pair) return right_distributive.holds && circle_commutative.holds;
  return !right_distributive.holds && !right_distributive.witness.empty() && !circle_commutative.holds &&
         !circle_commutative.witness.empty();
}

namespace {

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
// Above this order the exhaustive scans compute products on the fly instead of
// materializing N x N tables.
constexpr std::uint32_t kTableCacheLimit = 2048;

using Codes = std::vector<FieldElement>;

Codes as_elements(std::initializer_list<std::uint32_t> codes) {
  Codes out;
  for (const auto c : codes) out.push_back(FieldElement{c});
  return out;
}

struct DirectOps {
  const DicksonNearfield& nf;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return nf.field().add(FieldElement{a}, FieldElement{b}).code;
  }
  std::uint32_t circ(std::uint32_t a, std::uint32_t b) const { return nf.circle_code(a, b); }
};

struct TableOps {
  std::uint32_t order;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> circ_table;

  explicit TableOps(const DicksonNearfield& nf) : order(nf.order()) {
    const std::size_t cells = std::size_t{order} * order;
    add_table.resize(cells);
    circ_table.resize(cells);
    parallel_for(0, order, [&](std::size_t a) {
      for (std::uint32_t b = 0; b < order; ++b) {
        add_table[a * order + b] = nf.field().add(FieldElement{static_cast<std::uint32_t>(a)}, FieldElement{b}).code;
        circ_table[a * order + b] = nf.circle_code(static_cast<std::uint32_t>(a), b);
      }
    });
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_table[std::size_t{a} * order + b]; }
  std::uint32_t circ(std::uint32_t a, std::uint32_t b) const { return circ_table[std::size_t{a} * order + b]; }
};

void merge(LawCheck& into, const LawCheck& part) {
  into.checked += part.checked;
  if (part.mode == ScanMode::kSampled) into.mode = ScanMode::kSampled;
  if (!part.holds && into.holds) {
    into.holds = false;
    into.witness = part.witness;
  }
}

// Lexicographic scans stop at the first violation or when the budget runs out.
template <typename Bad>
LawCheck first_single(std::uint32_t n, std::uint32_t from, Bad bad) {
  LawCheck r;
  for (std::uint32_t a = from; a < n; ++a) {
    ++r.checked;
    if (bad(a)) {
      r.holds = false;
      r.witness = as_elements({a});
      return r;
    }
  }
  return r;
}

template <typename Bad>
LawCheck first_pair(std::uint32_t n, std::uint64_t budget, Bad bad) {
  LawCheck r;
  r.mode = budget >= std::uint64_t{n} * n ? ScanMode::kExhaustive : ScanMode::kSampled;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (r.checked == budget) return r;
      ++r.checked;
      if (bad(a, b)) {
        r.holds = false;
        r.witness = as_elements({a, b});
        return r;
      }
    }
  }
  return r;
}

template <typename Bad>
LawCheck first_triple(std::uint32_t n, std::uint64_t budget, Bad bad) {
  LawCheck r;
  r.mode = budget >= std::uint64_t{n} * n * n ? ScanMode::kExhaustive : ScanMode::kSampled;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (r.checked == budget) return r;
        ++r.checked;
        if (bad(a, b, c)) {
          r.holds = false;
          r.witness = as_elements({a, b, c});
          return r;
        }
      }
    }
  }
  return r;
}

// Parallel exhaustive check of a law expected to hold; on failure the
// lexicographically first counterexample is recovered sequentially.
template <typename Bad>
LawCheck all_pairs(std::uint32_t n, Bad bad) {
  std::atomic<bool> failed{false};
  parallel_for(0, n, [&](std::size_t i) {
    if (failed.load(std::memory_order_relaxed)) return;
    const auto a = static_cast<std::uint32_t>(i);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (bad(a, b)) {
        failed = true;
        return;
      }
    }
  });
  if (failed) return first_pair(n, kUnlimited, bad);
  return LawCheck{true, ScanMode::kExhaustive, std::uint64_t{n} * n, {}};
}

template <typename Bad>
LawCheck all_triples(std::uint32_t n, Bad bad) {
  std::atomic<bool> failed{false};
  parallel_for(0, n, [&](std::size_t i) {
    if (failed.load(std::memory_order_relaxed)) return;
    const auto a = static_cast<std::uint32_t>(i);
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (bad(a, b, c)) {
          failed = true;
          return;
        }
      }
    }
  });
  if (failed) return first_triple(n, kUnlimited, bad);
  return LawCheck{true, ScanMode::kExhaustive, std::uint64_t{n} * n * n, {}};
}

template <typename Bad>
LawCheck sample_pairs(std::uint32_t n, std::uint64_t samples, std::mt19937_64& rng, Bad bad) {
  LawCheck r;
  r.mode = ScanMode::kSampled;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = static_cast<std::uint32_t>(rng() % n);
    const auto b = static_cast<std::uint32_t>(rng() % n);
    ++r.checked;
    if (bad(a, b)) {
      r.holds = false;
      r.witness = as_elements({a, b});
      return r;
    }
  }
  return r;
}

template <typename Bad>
LawCheck sample_triples(std::uint32_t n, std::uint64_t samples, std::mt19937_64& rng, Bad bad) {
  LawCheck r;
  r.mode = ScanMode::kSampled;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = static_cast<std::uint32_t>(rng() % n);
    const auto b = static_cast<std::uint32_t>(rng() % n);
    const auto c = static_cast<std::uint32_t>(rng() % n);
    ++r.checked;
    if (bad(a, b, c)) {
      r.holds = false;
      r.witness = as_elements({a, b, c});
      return r;
    }
  }
  return r;
}

template <typename Ops>
StructureReport run_checks(const DicksonNearfield& nf, const Ops& ops, const VerifyOptions& options) {
  const std::uint32_t n = nf.order();
  const FieldTable& field = nf.field();
  const bool triples_exhaustive = options.mode == ScanMode::kExhaustive;
  const bool pairs_exhaustive = triples_exhaustive || n <= options.pair_cap;
  std::mt19937_64 rng(options.seed);

  const auto pairs = [&](auto bad) {
    return pairs_exhaustive ? all_pairs(n, bad) : sample_pairs(n, options.samples, rng, bad);
  };
  const auto triples = [&](auto bad) {
    return triples_exhaustive ? all_triples(n, bad) : sample_triples(n, options.samples, rng, bad);
  };

  StructureReport report;
  report.mode = options.mode;
  report.seed = options.seed;

  // (R, +)
  merge(report.additive_group, first_single(n, 0, [&](std::uint32_t a) {
          return ops.add(a, 0) != a || ops.add(0, a) != a || ops.add(a, field.neg(FieldElement{a}).code) != 0;
        }));
  merge(report.additive_group,
        pairs([&](std::uint32_t a, std::uint32_t b) { return ops.add(a, b) != ops.add(b, a); }));
  merge(report.additive_group, triples([&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
          return ops.add(ops.add(a, b), c) != ops.add(a, ops.add(b, c));
        }));

  // p * a by double-and-add must vanish
  const std::uint32_t p = field.characteristic();
  report.additive_exponent = first_single(n, 0, [&](std::uint32_t a) {
    std::uint32_t acc = 0, base = a;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = ops.add(acc, base);
      base = ops.add(base, base);
    }
    return acc != 0;
  });

  // (R*, o)
  merge(report.circle_group, first_single(n, 0, [&](std::uint32_t a) {
          return ops.circ(1, a) != a || ops.circ(a, 1) != a;
        }));
  merge(report.circle_group, pairs([&](std::uint32_t a, std::uint32_t b) {
          return a != 0 && b != 0 && ops.circ(a, b) == 0;
        }));
  merge(report.circle_group, first_single(n, 1, [&](std::uint32_t a) {
          try {
            const auto inv = nf.circle_inv(FieldElement{a}).code;
            return ops.circ(a, inv) != 1 || ops.circ(inv, a) != 1;
          } catch (const Error&) {
            return true;
          }
        }));
  report.circle_associative = triples([&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return ops.circ(ops.circ(a, b), c) != ops.circ(a, ops.circ(b, c));
  });

  report.left_distributive = triples([&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return ops.circ(a, ops.add(b, c)) != ops.add(ops.circ(a, b), ops.circ(a, c));
  });

  // expected failures: the lexicographically first witness when exhaustive,
  // otherwise the first hit in the seeded sample stream
  const auto right_bad = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return ops.circ(ops.add(a, b), c) != ops.add(ops.circ(a, c), ops.circ(b, c));
  };
  const auto commute_bad = [&](std::uint32_t a, std::uint32_t b) { return ops.circ(a, b) != ops.circ(b, a); };
  report.right_distributive = triples_exhaustive ? first_triple(n, kUnlimited, right_bad)
                                                 : sample_triples(n, options.samples, rng, right_bad);
  report.circle_commutative = pairs_exhaustive ? first_pair(n, kUnlimited, commute_bad)
                                               : sample_pairs(n, options.samples, rng, commute_bad);
  return report;
}

std::vector<FieldElement> collect(const std::vector<std::uint8_t>& flags) {
  std::vector<FieldElement> out;
  for (std::uint32_t code = 0; code < flags.size(); ++code) {
    if (flags[code]) out.push_back(FieldElement{code});
  }
  return out;
}

}  // namespace

StructureReport verify_axioms(const DicksonNearfield& nf, const VerifyOptions& options) {
  if (options.mode == ScanMode::kExhaustive && nf.order() > options.exhaustive_cap) {
    fail(ErrorCode::kCapExceeded, "exhaustive axiom check on order " + std::to_string(nf.order()) +
                                      " exceeds cap " + std::to_string(options.exhaustive_cap));
  }
  if (options.mode == ScanMode::kExhaustive && nf.order() <= kTableCacheLimit) {
    return run_checks(nf, TableOps(nf), options);
  }
  return run_checks(nf, DirectOps{nf}, options);
}

std::vector<FieldElement> center(const DicksonNearfield& nf) {
  const std::uint32_t n = nf.order();
  std::vector<std::uint8_t> member(n, 0);
  parallel_for(0, n, [&](std::size_t i) {
    const auto x = static_cast<std::uint32_t>(i);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (nf.circle_code(x, y) != nf.circle_code(y, x)) return;
    }
    member[x] = 1;
  });
  return collect(member);
}

std::vector<FieldElement> center_formula(const DicksonNearfield& nf) {
  return fixed_field(nf.field(), nf.pair().l());
}

std::vector<FieldElement> kernel(const DicksonNearfield& nf) {
  const std::uint32_t n = nf.order();
  const FieldTable& field = nf.field();
  const auto basis = field.additive_basis();
  std::vector<std::uint8_t> member(n, 0);
  parallel_for(0, n, [&](std::size_t i) {
    const auto lambda = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> basis_image;
    basis_image.reserve(basis.size());
    for (const auto e : basis) basis_image.push_back(nf.circle_code(e.code, lambda));
    for (std::uint32_t x = 0; x < n; ++x) {
      const FieldElement image{nf.circle_code(x, lambda)};
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto shifted = field.add(FieldElement{x}, basis[j]).code;
        if (nf.circle_code(shifted, lambda) != field.add(image, FieldElement{basis_image[j]}).code) return;
      }
    }
    member[lambda] = 1;
  });
  return collect(member);
}

std::vector<FieldElement> kernel_bruteforce(const DicksonNearfield& nf, std::uint64_t cap) {
  const std::uint32_t n = nf.order();
  if (n > cap) {
    fail(ErrorCode::kCapExceeded, "brute-force kernel on order " + std::to_string(n) + " exceeds cap " +
                                      std::to_string(cap));
  }
  const FieldTable& field = nf.field();
  std::vector<std::uint8_t> member(n, 0);
  parallel_for(0, n, [&](std::size_t i) {
    const auto lambda = static_cast<std::uint32_t>(i);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto lhs = nf.circle_code(field.add(FieldElement{a}, FieldElement{b}).code, lambda);
        const auto rhs = field.add(FieldElement{nf.circle_code(a, lambda)}, FieldElement{nf.circle_code(b, lambda)});
        if (lhs != rhs.code) return;
      }
    }
    member[lambda] = 1;
  });
  return collect(member);
}

}  // namespace dickson_lab
