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

#include "dickson_lab/report.hpp"

#include <sstream>

#include "dickson_lab/error.hpp"

namespace dickson_lab {

namespace {

Json codes(const std::vector<FieldElement>& elements) {
  Json out = Json::array();
  for (const auto e : elements) out.push_back(e.code);
  return out;
}

Json witness_or_null(const LawCheck& law) { return law.witness.empty() ? Json(nullptr) : codes(law.witness); }

}  // namespace

Json to_json(const FieldSpec& spec) {
  Json doc;
  doc["p"] = spec.p;
  doc["m"] = spec.m;
  doc["modulus"] = spec.modulus;
  doc["generator"] = spec.generator;
  return doc;
}

FieldSpec field_spec_from_json(const Json& doc) {
  try {
    FieldSpec spec;
    spec.p = doc.at("p").get<std::uint32_t>();
    spec.m = doc.at("m").get<std::uint32_t>();
    spec.modulus = doc.at("modulus").get<std::vector<std::uint32_t>>();
    spec.generator = doc.at("generator").get<std::uint32_t>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidSpec, e.what());
  }
}

Json pair_report(std::uint64_t q, std::uint64_t n) {
  const auto v = validate_pair(q, n);
  const auto base = as_prime_power(q);
  Json doc;
  doc["q"] = q;
  doc["p"] = base ? Json(base->p) : Json(nullptr);
  doc["l"] = base ? Json(base->l) : Json(nullptr);
  doc["n"] = n;
  doc["valid"] = v.valid();
  doc["violated"] = condition_label(v.violated);
  Json brackets = Json::array();
  if (v.pair) {
    const auto table = CosetIndexTable::build(*v.pair);
    for (const auto b : table.brackets_mod_n()) brackets.push_back(b);
  }
  doc["brackets_mod_n"] = brackets;
  return doc;
}

Json to_json(const LawCheck& law) {
  Json doc;
  doc["holds"] = law.holds;
  doc["mode"] = scan_mode_name(law.mode);
  doc["checked"] = law.checked;
  doc["witness"] = witness_or_null(law);
  return doc;
}

Json to_json(const DicksonNearfield& nf, const VerificationReport& report) {
  const auto& pair = nf.pair();
  const auto& ax = report.axioms;
  const auto& th = report.center_theorems;

  Json doc;
  doc["pair"] = pair_report(pair.q(), pair.n());
  doc["field"] = to_json(nf.field().spec());

  Json axioms;
  axioms["additive_group"] = to_json(ax.additive_group);
  axioms["additive_exponent_p"] = to_json(ax.additive_exponent);
  axioms["circle_associative"] = to_json(ax.circle_associative);
  axioms["circle_group"] = to_json(ax.circle_group);
  axioms["left_distributive"] = to_json(ax.left_distributive);
  axioms["right_distributive"] = to_json(ax.right_distributive);
  axioms["circle_commutative"] = to_json(ax.circle_commutative);
  axioms["is_nearfield"] = ax.nearfield_axioms_hold();
  axioms["as_expected"] = ax.as_expected(pair.trivial());
  doc["axioms"] = axioms;

  Json center;
  center["size"] = report.center.size();
  center["elements"] = codes(report.center);
  center["fixed_field_size"] = report.center_formula.size();
  center["matches_fixed_field"] = report.center_matches_formula();
  doc["center"] = center;

  Json kernel;
  kernel["size"] = report.kernel.size();
  kernel["elements"] = codes(report.kernel);
  kernel["matches_center"] = report.kernel_matches_center();
  kernel["oracle_agrees"] = report.kernel_oracle_agrees ? Json(*report.kernel_oracle_agrees) : Json(nullptr);
  doc["kernel"] = kernel;

  // key names are part of the report format consumed by downstream tooling
  Json theorems;
  theorems["lemma_1_5"] = report.bracket_lemma.holds();
  theorems["lemma_2_8"] = th.generated_is_whole_field;
  theorems["thm_2_6"] = th.inclusion_holds();
  theorems["thm_2_9"] = th.reverse_inclusion_holds() && report.center_matches_formula();
  theorems["ellers_karzel"] = report.kernel_equals_center_of_order(pair.q());
  theorems["coupling_law"] = report.coupling_law ? Json(report.coupling_law->holds()) : Json(nullptr);
  Json details;
  details["bracket_n"] = report.bracket_lemma.bracket_n;
  details["n_divides_bracket"] = report.bracket_lemma.n_divides_bracket;
  details["bracket_power_in_h"] = report.bracket_lemma.bracket_power_in_h;
  details["subfield_star_in_h"] = th.subfield_star_in_h;
  details["subfield_star_is_bracket_power"] = th.subfield_star_is_bracket_power;
  details["coupling_trivial_on_subfield"] = th.coupling_trivial_on_subfield;
  details["subfield_in_center"] = th.subfield_in_center;
  details["center_fixes_gn"] = th.center_fixes_gn;
  details["generated_degree"] = th.generated_degree;
  details["center_in_subfield"] = th.center_in_subfield;
  theorems["details"] = details;
  doc["theorems"] = theorems;

  Json witnesses;
  witnesses["right_distributivity"] = witness_or_null(ax.right_distributive);
  witnesses["commutativity"] = witness_or_null(ax.circle_commutative);
  witnesses["coupling_law"] =
      report.coupling_law && !report.coupling_law->witness.empty() ? codes(report.coupling_law->witness) : Json(nullptr);
  doc["witnesses"] = witnesses;

  doc["mode"] = scan_mode_name(ax.mode);
  doc["seed"] = ax.seed;
  doc["passed"] = report.passed(pair);
  return doc;
}

std::string_view cayley_op_name(CayleyOp op) {
  switch (op) {
    case CayleyOp::kAdd: return "add";
    case CayleyOp::kMul: return "mul";
    case CayleyOp::kCircle: return "circle";
  }
  return "?";
}

std::string export_cayley(const DicksonNearfield& nf, CayleyOp op, TableFormat format, std::uint64_t export_cap) {
  const std::uint32_t n = nf.order();
  if (n > export_cap) {
    fail(ErrorCode::kCapExceeded, "table of order " + std::to_string(n) + " exceeds export cap " +
                                      std::to_string(export_cap));
  }
  const FieldTable& field = nf.field();
  const auto apply = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    switch (op) {
      case CayleyOp::kAdd: return field.add(FieldElement{a}, FieldElement{b}).code;
      case CayleyOp::kMul: return field.mul(FieldElement{a}, FieldElement{b}).code;
      case CayleyOp::kCircle: return nf.circle_code(a, b);
    }
    return 0;
  };

  if (format == TableFormat::kCsv) {
    std::ostringstream out;
    out << cayley_op_name(op);
    for (std::uint32_t b = 0; b < n; ++b) out << ',' << b;
    out << '\n';
    for (std::uint32_t a = 0; a < n; ++a) {
      out << a;
      for (std::uint32_t b = 0; b < n; ++b) out << ',' << apply(a, b);
      out << '\n';
    }
    return out.str();
  }

  Json doc;
  doc["field"] = to_json(field.spec());
  doc["pair"] = {{"q", nf.pair().q()}, {"n", nf.pair().n()}};
  doc["op"] = cayley_op_name(op);
  Json elements = Json::array();
  Json table = Json::array();
  for (std::uint32_t a = 0; a < n; ++a) {
    elements.push_back(a);
    Json row = Json::array();
    for (std::uint32_t b = 0; b < n; ++b) row.push_back(apply(a, b));
    table.push_back(std::move(row));
  }
  doc["elements"] = std::move(elements);
  doc["table"] = std::move(table);
  return doc.dump() + "\n";
}

}  // namespace dickson_lab
