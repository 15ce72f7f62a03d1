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

#include "dickson_lab/theorems.hpp"

#include <algorithm>

#include "dickson_lab/dickson.hpp"
#include "dickson_lab/error.hpp"

namespace dickson_lab {

BracketLemmaReport verify_bracket_lemma(const DicksonNearfield& nf) {
  const auto& pair = nf.pair();
  BracketLemmaReport r;
  r.bracket_n = bracket(pair.n(), pair.q());
  r.n_divides_bracket = r.bracket_n % pair.n() == 0;
  // H = <g^n> is exactly the set of elements whose dlog is a multiple of n
  const FieldElement power = nf.field().exp(r.bracket_n);
  const auto d = nf.field().log(power);
  r.bracket_power_in_h = d.has_value() && *d % pair.n() == 0 && nf.coset_index(power) == pair.n();
  return r;
}

BracketLemmaReport verify_bracket_lemma(const DicksonPair& pair) {
  BracketLemmaReport r;
  const std::uint64_t n = pair.n();
  r.bracket_n = bracket(n, pair.q());
  r.n_divides_bracket = r.bracket_n % n == 0;
  // g^e lies in H = <g^n> iff n divides e mod (q^n - 1); needs n | q^n - 1
  const auto order = checked_pow(pair.q(), n);
  if (!order) fail(ErrorCode::kOverflow, "q^n does not fit in 64 bits");
  const std::uint64_t group = *order - 1;
  const auto ct = CosetIndexTable::build(pair);
  r.bracket_power_in_h = group % n == 0 && (r.bracket_n % group) % n == 0 && ct.k_for_residue(0) == n;
  return r;
}

CenterTheoremReport verify_center_theorems(const DicksonNearfield& nf, std::span<const FieldElement> center_set) {
  const FieldTable& field = nf.field();
  const auto& pair = nf.pair();
  const std::uint32_t n = pair.n();
  const FieldElement g = field.generator();
  const auto subfield = center_formula(nf);

  std::vector<FieldElement> subfield_star(subfield.begin() + 1, subfield.end());

  CenterTheoremReport r;
  r.subfield_star_in_h = std::all_of(subfield_star.begin(), subfield_star.end(),
                                     [&](FieldElement x) { return *field.log(x) % n == 0; });

  // the cyclic group generated by g^{[n]_q}, collected in ascending order
  const FieldElement root = field.exp(bracket(n, pair.q()));
  std::vector<FieldElement> powers;
  FieldElement cur = field.one();
  do {
    powers.push_back(cur);
    cur = field.mul(cur, root);
  } while (cur != field.one() && powers.size() <= field.group_order());
  std::sort(powers.begin(), powers.end());
  r.subfield_star_is_bracket_power = powers == subfield_star;

  // an automorphism is the identity iff it fixes the multiplicative generator
  r.coupling_trivial_on_subfield = std::all_of(subfield_star.begin(), subfield_star.end(),
                                                [&](FieldElement x) { return nf.coupling(x, g) == g; });
  r.subfield_in_center = std::includes(center_set.begin(), center_set.end(), subfield.begin(), subfield.end());

  const FieldElement gn = field.pow(g, n);
  r.center_fixes_gn = std::all_of(center_set.begin(), center_set.end(),
                                  [&](FieldElement x) { return x.code == 0 || nf.coupling(x, gn) == gn; });
  r.generated_degree = generated_subfield(field, gn).degree;
  r.generated_is_whole_field = r.generated_degree == field.degree();
  r.center_in_subfield = std::includes(subfield.begin(), subfield.end(), center_set.begin(), center_set.end());
  return r;
}

CouplingLawReport verify_coupling_law(const DicksonNearfield& nf) {
  const FieldTable& field = nf.field();
  const std::uint32_t n = nf.pair().n();
  const std::uint32_t order = nf.order();
  std::vector<FieldElement> probes{field.generator()};
  for (const auto e : field.additive_basis()) probes.push_back(e);

  CouplingLawReport r;
  for (std::uint32_t a = 1; a < order && r.holds(); ++a) {
    const FieldElement fa{a};
    for (std::uint32_t b = 1; b < order; ++b) {
      const FieldElement fb{b};
      ++r.checked;
      const FieldElement twisted = field.mul(nf.coupling(fa, fb), fa);
      for (const auto x : probes) {
        if (nf.coupling(fa, nf.coupling(fb, x)) != nf.coupling(twisted, x)) {
          r.composition_holds = false;
          break;
        }
      }
      const std::uint32_t lhs = nf.coset_index(nf.circle(fa, fb)) % n;
      const std::uint32_t rhs = (nf.coset_index(fa) + nf.coset_index(fb)) % n;
      if (lhs != rhs) r.index_additive = false;
      if (!r.holds()) {
        r.witness = {fa, fb};
        break;
      }
    }
  }
  return r;
}

bool VerificationReport::passed(const DicksonPair& pair) const {
  return axioms.as_expected(pair.trivial()) && center_matches_formula() && kernel_equals_center_of_order(pair.q()) &&
         bracket_lemma.holds() && center_theorems.inclusion_holds() && center_theorems.reverse_inclusion_holds() &&
         (!coupling_law || coupling_law->holds());
}

VerificationReport verify_nearfield(const DicksonNearfield& nf, const VerifyOptions& options) {
  VerificationReport r;
  r.axioms = verify_axioms(nf, options);
  r.center = center(nf);
  r.center_formula = center_formula(nf);
  r.kernel = kernel(nf);
  if (nf.order() <= kDefaultKernelOracleCap) r.kernel_oracle_agrees = kernel_bruteforce(nf) == r.kernel;
  r.bracket_lemma = verify_bracket_lemma(nf);
  r.center_theorems = verify_center_theorems(nf, r.center);
  if (nf.order() <= options.exhaustive_cap) r.coupling_law = verify_coupling_law(nf);
  return r;
}

}  // namespace dickson_lab
