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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "dickson_lab/arith.hpp"
#include "dickson_lab/dickson.hpp"
#include "dickson_lab/error.hpp"
#include "dickson_lab/field.hpp"
#include "dickson_lab/nearfield.hpp"
#include "dickson_lab/report.hpp"
#include "dickson_lab/structure.hpp"
#include "dickson_lab/theorems.hpp"

namespace dickson_lab::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kCapExceeded:
    case ErrorCode::kOrderCapExceeded:
    case ErrorCode::kInternalAssertion:
      return kExitCheckFailed;
    default:
      return kExitUsage;
  }
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "?";
}

// Rejects formats a subcommand cannot produce.
bool require_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed, const char* command,
                    std::ostream& err) {
  if (std::find(allowed.begin(), allowed.end(), config.format) != allowed.end()) return true;
  err << "error: " << command << " does not support --format " << format_name(config.format) << "\n";
  return false;
}

// ---- pairs --------------------------------------------------------------

struct PairsArgs {
  std::uint64_t max_order = 100;
  std::uint32_t min_n = 2;
  bool include_trivial = false;
  std::vector<std::uint64_t> check;
};

int cmd_pairs(const PairsArgs& args, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_format(config, {OutputFormat::kJson, OutputFormat::kText}, "pairs", err)) return kExitUsage;

  if (!args.check.empty()) {
    const std::uint64_t q = args.check[0];
    const std::uint64_t n = args.check[1];
    if (q < 2 || n < 1) {
      err << "error: --check needs q >= 2 and n >= 1\n";
      return kExitUsage;
    }
    const auto v = validate_pair(q, n);
    const std::string verdict =
        v.valid() ? "valid" : "invalid: condition " + std::string(condition_label(v.violated));
    if (config.format == OutputFormat::kJson) {
      out << pair_report(q, n).dump(2) << "\n";
      err << verdict << "\n";
    } else {
      out << verdict << "\n";
    }
    return v.valid() ? kExitOk : kExitCheckFailed;
  }

  if (args.max_order < 2) {
    err << "error: --max-order must be at least 2\n";
    return kExitUsage;
  }
  const std::uint32_t min_n = args.include_trivial ? 1 : std::max<std::uint32_t>(args.min_n, 1);
  const auto pairs = enumerate_pairs(args.max_order, min_n);

  if (config.format == OutputFormat::kText) {
    for (const auto& pr : pairs) {
      out << "(" << pr.q() << ", " << pr.n() << ")  p=" << pr.p() << " l=" << pr.l() << " order=" << pr.order()
          << (pr.trivial() ? "  [trivial]" : "") << "\n";
    }
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& pr : pairs) {
    Json item;
    item["q"] = pr.q();
    item["p"] = pr.p();
    item["l"] = pr.l();
    item["n"] = pr.n();
    item["order"] = pr.order();
    item["trivial"] = pr.trivial();
    list.push_back(std::move(item));
  }
  Json doc;
  doc["max_order"] = args.max_order;
  doc["min_n"] = min_n;
  doc["count"] = pairs.size();
  doc["pairs"] = std::move(list);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

// ---- shared construction -------------------------------------------------

// Validates (q, n) and builds the nearfield; on failure writes the reason and
// stores the exit status in `status`.
std::optional<DicksonNearfield> make_nearfield(std::uint64_t q, std::uint64_t n, std::uint64_t generator_exponent,
                                               const RunConfig& config, std::ostream& err, int& status) {
  if (q < 2 || n < 1) {
    err << "error: need q >= 2 and n >= 1\n";
    status = kExitUsage;
    return std::nullopt;
  }
  const auto v = validate_pair(q, n);
  if (!v.valid()) {
    err << "invalid: condition " << condition_label(v.violated) << "\n";
    status = kExitUsage;
    return std::nullopt;
  }
  NearfieldOptions options;
  options.order_cap = config.order_cap;
  options.generator_exponent = generator_exponent;
  return DicksonNearfield::build(*v.pair, options);
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t generator = 1;
  std::string mode = "auto";
  std::uint64_t samples = 100000;
};

void write_text_report(const DicksonNearfield& nf, const VerificationReport& r, std::ostream& out) {
  const auto& pair = nf.pair();
  const auto yes = [](bool b) { return b ? "yes" : "NO"; };
  const auto law = [&](const char* name, const LawCheck& c) {
    out << "  " << name << ": " << (c.holds ? "holds" : "fails") << " (" << scan_mode_name(c.mode) << ", "
        << c.checked << " checked)";
    if (!c.witness.empty()) {
      out << " witness";
      for (const auto w : c.witness) out << ' ' << w.code;
    }
    out << "\n";
  };
  out << "DN(" << pair.q() << ", " << pair.n() << ") over F_" << pair.p() << "^" << nf.field().degree()
      << ", generator code " << nf.generator().code << "\n";
  out << "axioms:\n";
  law("additive group", r.axioms.additive_group);
  law("additive exponent p", r.axioms.additive_exponent);
  law("circle associative", r.axioms.circle_associative);
  law("circle group on nonzeros", r.axioms.circle_group);
  law("left distributive", r.axioms.left_distributive);
  law("right distributive", r.axioms.right_distributive);
  law("circle commutative", r.axioms.circle_commutative);
  out << "center size " << r.center.size() << ", equals {x : x^q = x}: " << yes(r.center_matches_formula()) << "\n";
  out << "kernel size " << r.kernel.size() << ", equals center: " << yes(r.kernel_matches_center()) << "\n";
  out << "bracket lemma: " << yes(r.bracket_lemma.holds()) << "\n";
  out << "F_q inside center: " << yes(r.center_theorems.inclusion_holds()) << "\n";
  out << "center inside F_q: " << yes(r.center_theorems.reverse_inclusion_holds()) << "\n";
  out << "F_p<g^n> degree: " << r.center_theorems.generated_degree << "\n";
  if (r.coupling_law) out << "coupling law: " << yes(r.coupling_law->holds()) << "\n";
  out << "result: " << (r.passed(pair) ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const VerifyArgs& args, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_format(config, {OutputFormat::kJson, OutputFormat::kText}, "verify", err)) return kExitUsage;
  int status = kExitOk;
  const auto nf = make_nearfield(args.q, args.n, args.generator, config, err, status);
  if (!nf) return status;

  VerifyOptions options;
  options.seed = config.seed;
  options.samples = args.samples;
  options.exhaustive_cap = config.exhaustive_cap;
  if (args.mode == "exhaustive") {
    options.mode = ScanMode::kExhaustive;
  } else if (args.mode == "sampled") {
    options.mode = ScanMode::kSampled;
  } else {
    options.mode = nf->order() <= config.exhaustive_cap ? ScanMode::kExhaustive : ScanMode::kSampled;
  }

  const auto report = verify_nearfield(*nf, options);
  if (config.format == OutputFormat::kText) {
    write_text_report(*nf, report, out);
  } else {
    out << to_json(*nf, report).dump(2) << "\n";
  }
  return report.passed(nf->pair()) ? kExitOk : kExitCheckFailed;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::string op = "circle";
  std::uint64_t generator = 1;
  std::string path;
};

int cmd_table(const TableArgs& args, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_format(config, {OutputFormat::kJson, OutputFormat::kCsv}, "table", err)) return kExitUsage;
  static const std::map<std::string, CayleyOp> kOps{
      {"add", CayleyOp::kAdd}, {"mul", CayleyOp::kMul}, {"circle", CayleyOp::kCircle}};
  int status = kExitOk;
  const auto nf = make_nearfield(args.q, args.n, args.generator, config, err, status);
  if (!nf) return status;

  const auto format = config.format == OutputFormat::kCsv ? TableFormat::kCsv : TableFormat::kJson;
  const std::string doc = export_cayley(*nf, kOps.at(args.op), format, config.export_cap);
  err << to_json(nf->field().spec()).dump() << "\n";
  if (args.path.empty()) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(args.path, std::ios::binary);
  file << doc;
  if (!file) {
    err << "error: cannot write " << args.path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---- field-info ------------------------------------------------------------

struct FieldInfoArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 1;
  std::string spec_path;
};

int cmd_field_info(const FieldInfoArgs& args, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_format(config, {OutputFormat::kJson, OutputFormat::kText}, "field-info", err)) return kExitUsage;

  std::optional<FieldTable> field;
  if (!args.spec_path.empty()) {
    std::ifstream in(args.spec_path);
    if (!in) {
      err << "error: cannot read " << args.spec_path << "\n";
      return kExitUsage;
    }
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    field = FieldTable::from_spec(field_spec_from_json(doc), config.order_cap);
  } else {
    const auto base = as_prime_power(args.q);
    if (!base || args.n < 1) {
      err << "error: q must be a prime power and n >= 1\n";
      return kExitUsage;
    }
    field = FieldTable::build(base->p, static_cast<std::uint32_t>(base->l * args.n), config.order_cap);
  }

  Json subfields = Json::array();
  for (const auto s : divisors(field->degree())) {
    Json item;
    item["degree"] = s;
    item["size"] = fixed_field(*field, static_cast<std::uint32_t>(s)).size();
    subfields.push_back(std::move(item));
  }
  if (config.format == OutputFormat::kText) {
    const auto& spec = field->spec();
    out << "F_" << spec.p << "^" << spec.m << " (order " << field->order() << ")\nmodulus (constant term first):";
    for (const auto c : spec.modulus) out << ' ' << c;
    out << "\ngenerator code: " << spec.generator << "\nsubfields:";
    for (const auto& s : subfields) out << " F_" << spec.p << "^" << s["degree"].get<std::uint64_t>();
    out << "\n";
    return kExitOk;
  }
  Json doc;
  doc["field"] = to_json(field->spec());
  doc["order"] = field->order();
  doc["subfields"] = std::move(subfields);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Dickson nearfields: construction and exhaustive verification", "dickson-lab"};
  app.require_subcommand(1);

  RunConfig config;
  static const std::map<std::string, OutputFormat> kFormats{
      {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}, {"text", OutputFormat::kText}};
  app.add_option("--seed", config.seed, "Seed for sampled checks");
  app.add_option("--order-cap", config.order_cap, "Largest field order to construct")->check(CLI::PositiveNumber);
  app.add_option("--exhaustive-cap", config.exhaustive_cap, "Largest order for exhaustive triple loops")
      ->check(CLI::PositiveNumber);
  app.add_option("--export-cap", config.export_cap, "Largest order for Cayley table export")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  PairsArgs pairs_args;
  auto* pairs = app.add_subcommand("pairs", "List Dickson pairs or check one");
  pairs->fallthrough();
  pairs->add_option("--max-order", pairs_args.max_order, "Largest q^n to list");
  pairs->add_option("--min-n", pairs_args.min_n, "Smallest n to list");
  pairs->add_flag("--include-trivial", pairs_args.include_trivial, "Also list n = 1");
  pairs->add_option("--check", pairs_args.check, "Validate a single pair")->expected(2)->type_name("Q N");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Build DN(q, n) and verify its structure");
  verify->fallthrough();
  verify->add_option("q", verify_args.q)->required();
  verify->add_option("n", verify_args.n)->required();
  verify->add_option("--generator", verify_args.generator, "Use g^E as the generator (E coprime to q^n - 1)")
      ->type_name("DLOG-OFFSET");
  verify->add_option("--mode", verify_args.mode, "auto, exhaustive or sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify->add_option("--samples", verify_args.samples, "Tuples per law in sampled mode")->check(CLI::PositiveNumber);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Export a Cayley table");
  table->fallthrough();
  table->add_option("q", table_args.q)->required();
  table->add_option("n", table_args.n)->required();
  table->add_option("path", table_args.path, "Output file (stdout when omitted)");
  table->add_option("--op", table_args.op, "add, mul or circle")->check(CLI::IsMember({"add", "mul", "circle"}));
  table->add_option("--generator", table_args.generator, "Use g^E as the generator")->type_name("DLOG-OFFSET");

  FieldInfoArgs info_args;
  auto* info = app.add_subcommand("field-info", "Describe the model of F_{q^n}");
  info->fallthrough();
  info->add_option("q", info_args.q);
  info->add_option("n", info_args.n);
  info->add_option("--spec", info_args.spec_path, "Load and validate a field spec JSON file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (config.exhaustive_cap > config.order_cap) {
      throw CLI::ValidationError("--exhaustive-cap", "must not exceed --order-cap");
    }
    if (info->parsed() && info_args.spec_path.empty() && info_args.q == 0) {
      throw CLI::RequiredError("field-info needs q or --spec");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pairs->parsed()) return cmd_pairs(pairs_args, config, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, config, out, err);
    if (table->parsed()) return cmd_table(table_args, config, out, err);
    return cmd_field_info(info_args, config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace dickson_lab::cli
