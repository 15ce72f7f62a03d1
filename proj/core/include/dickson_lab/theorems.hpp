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

// Machine checks of the facts about DN_g(q, n) that pin its center to F_q,
// including the intermediate steps of the arguments, plus the aggregate run
// that the CLI reports.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dickson_lab/nearfield.hpp"
#include "dickson_lab/structure.hpp"

namespace dickson_lab {

/// n | [n]_q, and g^{[n]_q} lies in H = <g^n>.
struct BracketLemmaReport {
  std::uint64_t bracket_n = 0;
  bool n_divides_bracket = false;
  bool bracket_power_in_h = false;

  bool holds() const { return n_divides_bracket && bracket_power_in_h; }
};

BracketLemmaReport verify_bracket_lemma(const DicksonNearfield& nf);

/// Integer-only form: works in Z/(q^n - 1) without building the field, so it
/// scales to every pair below the order cap.
BracketLemmaReport verify_bracket_lemma(const DicksonPair& pair);

struct CenterTheoremReport {
  // F_q is inside the center
  bool subfield_star_in_h = false;              // F_q^* subset of H
  bool subfield_star_is_bracket_power = false;  // F_q^* = <g^{[n]_q}>
  bool coupling_trivial_on_subfield = false;    // phi_x = id for x in F_q^*
  bool subfield_in_center = false;
  // the center is inside F_q
  bool center_fixes_gn = false;                 // phi_x(g^n) = g^n for x in C(R)^*
  std::uint32_t generated_degree = 0;           // f with F_p<g^n> = F_{p^f}
  bool generated_is_whole_field = false;        // f = l * n
  bool center_in_subfield = false;

  bool inclusion_holds() const {
    return subfield_star_in_h && subfield_star_is_bracket_power && coupling_trivial_on_subfield && subfield_in_center;
  }
  bool reverse_inclusion_holds() const {
    return center_fixes_gn && generated_is_whole_field && center_in_subfield;
  }
};

/// center_set must be the brute-force center (ascending codes).
CenterTheoremReport verify_center_theorems(const DicksonNearfield& nf, std::span<const FieldElement> center_set);

/// Coupling-law checks over nonzero a, b (exhaustive):
///   phi_a o phi_b = phi_{phi_a(b) * a}  (field product), and
///   k(a o b) = k(a) + k(b) mod n.
struct CouplingLawReport {
  bool composition_holds = true;
  bool index_additive = true;
  std::uint64_t checked = 0;
  std::vector<FieldElement> witness;

  bool holds() const { return composition_holds && index_additive; }
};

/// An automorphism of F_{q^n} is fixed by its value on g, so compositions are
/// compared on g and, as an extra guard, on the additive basis.
CouplingLawReport verify_coupling_law(const DicksonNearfield& nf);

struct VerificationReport {
  StructureReport axioms;
  std::vector<FieldElement> center;
  std::vector<FieldElement> center_formula;
  std::vector<FieldElement> kernel;
  std::optional<bool> kernel_oracle_agrees;  // only below the oracle cap
  BracketLemmaReport bracket_lemma;
  CenterTheoremReport center_theorems;
  std::optional<CouplingLawReport> coupling_law;  // only when pair loops are exhaustive

  bool center_matches_formula() const { return center == center_formula; }
  bool kernel_matches_center() const { return kernel == center; }
  /// Kernel equals center and both have q elements.
  bool kernel_equals_center_of_order(std::uint64_t q) const {
    return kernel_matches_center() && center.size() == q && kernel_oracle_agrees.value_or(true);
  }
  bool passed(const DicksonPair& pair) const;
};

VerificationReport verify_nearfield(const DicksonNearfield& nf, const VerifyOptions& options = {});

}  // namespace dickson_lab
