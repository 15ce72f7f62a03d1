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

#include "dickson_lab/dickson.hpp"

#include <functional>
#include <set>

#include "gtest/gtest.h"

#include "dickson_lab/error.hpp"
#include "oracle.hpp"

namespace dickson_lab {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInternalAssertion;
}

FieldElement E(std::uint32_t code) { return FieldElement{code}; }

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(1, 7), 1u);
  EXPECT_EQ(bracket(2, 3), 4u);
  EXPECT_EQ(bracket(3, 7), 57u);
  EXPECT_EQ(bracket(4, 5), 156u);
  EXPECT_EQ(code_of([] { bracket(0, 5); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { bracket(70, 2); }), ErrorCode::kOverflow);
}

TEST(Bracket, GeometricSumIdentity) {
  // (q - 1) [k]_q = q^k - 1
  for (std::uint64_t q = 2; q < 40; ++q) {
    std::uint64_t qk = q;
    for (std::uint64_t k = 1; k < 8; ++k) {
      ASSERT_EQ((q - 1) * bracket(k, q), qk - 1);
      qk *= q;
    }
  }
}

TEST(ValidatePair, Examples) {
  const auto ok = validate_pair(3, 2);
  EXPECT_TRUE(ok.valid());
  EXPECT_EQ(ok.pair->p(), 3u);
  EXPECT_EQ(ok.pair->l(), 1u);
  EXPECT_EQ(ok.pair->order(), 9u);
  EXPECT_FALSE(ok.pair->trivial());

  EXPECT_EQ(validate_pair(3, 4).violated, PairCondition::kNotFourModThree);
  EXPECT_EQ(validate_pair(2, 2).violated, PairCondition::kPrimeDivisors);
  EXPECT_EQ(validate_pair(6, 2).violated, PairCondition::kPrimePower);
  EXPECT_EQ(validate_pair(5, 6).violated, PairCondition::kPrimeDivisors);
  EXPECT_TRUE(validate_pair(5, 4).valid());
  EXPECT_TRUE(validate_pair(4, 3).valid());
  EXPECT_TRUE(validate_pair(2, 1).valid());
  EXPECT_EQ(code_of([] { validate_pair(1, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { validate_pair(3, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(condition_label(PairCondition::kNotFourModThree), "iii");
  EXPECT_EQ(condition_label(PairCondition::kNone), "none");
}

TEST(ValidatePair, MakeThrows) {
  EXPECT_EQ(code_of([] { DicksonPair::make(3, 4); }), ErrorCode::kInvalidPair);
  const auto pair = DicksonPair::make(9, 2);
  EXPECT_EQ(pair.p(), 3u);
  EXPECT_EQ(pair.l(), 2u);
}

TEST(ValidatePair, AgreesWithDefinition) {
  for (std::uint64_t q = 2; q < 200; ++q) {
    for (std::uint64_t n = 1; n < 40; ++n) {
      ASSERT_EQ(validate_pair(q, n).valid(), oracle::naive_dickson_pair(q, n)) << q << "," << n;
    }
  }
}

std::set<std::pair<std::uint64_t, std::uint64_t>> as_set(const std::vector<DicksonPair>& pairs) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& p : pairs) out.emplace(p.q(), p.n());
  return out;
}

TEST(EnumeratePairs, AgreesWithNaiveScan) {
  for (const std::uint64_t cap : {8u, 10u, 100u, 1024u, 5000u}) {
    for (const std::uint32_t min_n : {1u, 2u}) {
      const auto pairs = enumerate_pairs(cap, min_n);
      EXPECT_EQ(as_set(pairs), oracle::naive_pairs(cap, min_n)) << cap << " " << min_n;
      EXPECT_EQ(as_set(pairs).size(), pairs.size());
      for (std::size_t i = 1; i < pairs.size(); ++i) {
        ASSERT_LE(pairs[i - 1].order(), pairs[i].order());
      }
    }
  }
}

TEST(EnumeratePairs, SmallListInOrder) {
  const auto pairs = enumerate_pairs(100, 2);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> got;
  for (const auto& p : pairs) got.emplace_back(p.q(), p.n());
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> want = {{3, 2}, {5, 2}, {7, 2}, {4, 3}, {9, 2}};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(enumerate_pairs(1).empty());
}

TEST(CosetTable, ThreeTwo) {
  const auto ct = CosetIndexTable::build(DicksonPair::make(3, 2));
  EXPECT_EQ(ct.n(), 2u);
  EXPECT_EQ(ct.frobenius_step(), 1u);
  EXPECT_EQ(ct.k_for_residue(1), 1u);
  EXPECT_EQ(ct.k_for_residue(0), 2u);
}

TEST(CosetTable, FiveFour) {
  const auto ct = CosetIndexTable::build(DicksonPair::make(5, 4));
  const std::vector<std::uint32_t> brackets(ct.brackets_mod_n().begin(), ct.brackets_mod_n().end());
  EXPECT_EQ(brackets, (std::vector<std::uint32_t>{1, 2, 3, 0}));  // 1, 6, 31, 156 mod 4
}

TEST(CosetTable, TrivialPair) {
  const auto ct = CosetIndexTable::build(DicksonPair::make(7, 1));
  EXPECT_EQ(ct.n(), 1u);
  EXPECT_EQ(ct.k_for_residue(0), 1u);
}

TEST(CosetTable, BracketsPermuteResidues) {
  for (const auto& pair : enumerate_pairs(std::uint64_t{1} << 20)) {
    const auto ct = CosetIndexTable::build(pair);
    for (std::uint32_t k = 1; k <= pair.n(); ++k) {
      ASSERT_EQ(ct.k_for_residue(static_cast<std::uint32_t>(bracket(k, pair.q()) % pair.n())), k);
    }
  }
}

TEST(CosetIndex, Examples) {
  const auto t = FieldTable::build(3, 2);
  const auto ct = CosetIndexTable::build(DicksonPair::make(3, 2));
  EXPECT_EQ(coset_index(t, ct, t.generator()), 1u);
  EXPECT_EQ(coset_index(t, ct, t.one()), 2u);
  EXPECT_EQ(coset_index(t, ct, t.exp(2)), 2u);
  EXPECT_EQ(coset_index(t, ct, t.exp(7)), 1u);
  EXPECT_EQ(code_of([&] { coset_index(t, ct, t.zero()); }), ErrorCode::kZeroHasNoCoset);
  const auto wrong = CosetIndexTable::build(DicksonPair::make(4, 3));
  EXPECT_EQ(code_of([&] { coset_index(t, wrong, t.one()); }), ErrorCode::kInvalidArgument);
}

TEST(Coupling, Examples) {
  const auto t = FieldTable::build(3, 2);
  const auto ct = CosetIndexTable::build(DicksonPair::make(3, 2));
  const oracle::PolyField ref(3, t.spec().modulus);
  for (std::uint32_t b = 0; b < 9; ++b) {
    // non-squares cube, squares act trivially
    EXPECT_EQ(apply_coupling(t, ct, t.generator(), E(b)).code, ref.pow(b, 3));
    EXPECT_EQ(apply_coupling(t, ct, t.one(), E(b)), E(b));
  }
}

// phi_a is a field automorphism, and depends only on the coset of a.
TEST(Coupling, AutomorphismConstantOnCosets) {
  for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 2}, {4, 3}, {5, 4}, {7, 3}, {9, 2}}) {
    const auto pair = DicksonPair::make(q, n);
    const auto t = FieldTable::build(pair.p(), pair.l() * n);
    const auto ct = CosetIndexTable::build(pair);
    for (std::uint32_t d = 0; d < t.group_order(); ++d) {
      const auto a = t.exp(d);
      const auto ah = t.mul(a, t.exp(n));  // same coset of H = <g^n>
      ASSERT_EQ(coset_index(t, ct, a), coset_index(t, ct, ah));
      for (std::uint32_t b = 0; b < t.order(); b += 1 + t.order() / 64) {
        for (std::uint32_t c = 0; c < t.order(); c += 1 + t.order() / 64) {
          const auto phi = [&](FieldElement x) { return apply_coupling(t, ct, a, x); };
          ASSERT_EQ(phi(t.add(E(b), E(c))), t.add(phi(E(b)), phi(E(c))));
          ASSERT_EQ(phi(t.mul(E(b), E(c))), t.mul(phi(E(b)), phi(E(c))));
        }
      }
    }
  }
}

}  // namespace
}  // namespace dickson_lab
