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
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "cli.hpp"
#include "dickson_lab/error.hpp"

namespace dickson_lab {
namespace {

std::vector<std::string> keys(const Json& obj) {
  std::vector<std::string> out;
  for (const auto& [k, v] : obj.items()) out.push_back(k);
  return out;
}

DicksonNearfield make(std::uint64_t q, std::uint32_t n) { return DicksonNearfield::build(DicksonPair::make(q, n)); }

TEST(Json, FieldSpecRoundTrip) {
  const auto spec = FieldTable::build(3, 2).spec();
  const auto doc = to_json(spec);
  EXPECT_EQ(keys(doc), (std::vector<std::string>{"p", "m", "modulus", "generator"}));
  EXPECT_EQ(doc["modulus"], Json::parse("[2,1,1]"));
  EXPECT_EQ(field_spec_from_json(doc), spec);
  EXPECT_THROW(field_spec_from_json(Json::parse(R"({"p": 3})")), Error);
  EXPECT_THROW(field_spec_from_json(Json::parse(R"({"p": "x", "m": 1, "modulus": [1,1], "generator": 2})")), Error);
}

TEST(Json, PairReport) {
  const auto ok = pair_report(5, 4);
  EXPECT_EQ(keys(ok), (std::vector<std::string>{"q", "p", "l", "n", "valid", "violated", "brackets_mod_n"}));
  EXPECT_EQ(ok["valid"], true);
  EXPECT_EQ(ok["violated"], "none");
  EXPECT_EQ(ok["brackets_mod_n"], Json::parse("[1,2,3,0]"));
  const auto bad = pair_report(3, 4);
  EXPECT_EQ(bad["valid"], false);
  EXPECT_EQ(bad["violated"], "iii");
  const auto not_power = pair_report(6, 2);
  EXPECT_EQ(not_power["violated"], "i");
  EXPECT_TRUE(not_power["l"].is_null());
}

TEST(Json, VerificationReportShape) {
  const auto nf = make(3, 2);
  const auto doc = to_json(nf, verify_nearfield(nf));
  EXPECT_EQ(keys(doc), (std::vector<std::string>{"pair", "field", "axioms", "center", "kernel", "theorems",
                                                 "witnesses", "mode", "seed", "passed"}));
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["center"]["size"], 3);
  EXPECT_EQ(doc["center"]["elements"], Json::parse("[0,1,2]"));
  EXPECT_EQ(doc["center"]["matches_fixed_field"], true);
  EXPECT_EQ(doc["kernel"]["matches_center"], true);
  EXPECT_EQ(doc["witnesses"]["right_distributivity"], Json::parse("[1,3,3]"));
  EXPECT_EQ(doc["witnesses"]["commutativity"], Json::parse("[3,4]"));
  EXPECT_EQ(doc["mode"], "exhaustive");
  EXPECT_EQ(doc["axioms"]["right_distributive"]["holds"], false);
  EXPECT_EQ(doc["axioms"]["left_distributive"]["holds"], true);
  // deterministic output
  EXPECT_EQ(doc.dump(), to_json(nf, verify_nearfield(nf)).dump());
}

TEST(Cayley, CsvCircle) {
  const auto nf = make(3, 2);
  const auto csv = export_cayley(nf, CayleyOp::kCircle, TableFormat::kCsv);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "circle,0,1,2,3,4,5,6,7,8");
  EXPECT_EQ(lines[1], "0,0,0,0,0,0,0,0,0,0");
  for (std::uint32_t a = 0; a < 9; ++a) {
    std::string want = std::to_string(a);
    for (std::uint32_t b = 0; b < 9; ++b) want += "," + std::to_string(nf.circle({a}, {b}).code);
    EXPECT_EQ(lines[a + 1], want);
  }
}

TEST(Cayley, JsonTables) {
  const auto nf = make(5, 2);
  const auto add = Json::parse(export_cayley(nf, CayleyOp::kAdd, TableFormat::kJson));
  EXPECT_EQ(keys(add), (std::vector<std::string>{"field", "pair", "op", "elements", "table"}));
  EXPECT_EQ(add["op"], "add");
  const auto& t = add["table"];
  ASSERT_EQ(t.size(), 25u);
  for (std::size_t a = 0; a < 25; ++a)
    for (std::size_t b = 0; b < 25; ++b) ASSERT_EQ(t[a][b], t[b][a]);

  // n = 1: the twisted product is the field product
  const auto field_nf = make(25, 1);
  EXPECT_EQ(Json::parse(export_cayley(field_nf, CayleyOp::kCircle, TableFormat::kJson))["table"],
            Json::parse(export_cayley(field_nf, CayleyOp::kMul, TableFormat::kJson))["table"]);
  EXPECT_THROW(export_cayley(make(5, 4), CayleyOp::kAdd, TableFormat::kCsv, 100), Error);
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, PairsList) {
  const auto r = run_cli({"pairs", "--max-order", "100"});
  EXPECT_EQ(r.status, cli::kExitOk);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["count"], 5);
  EXPECT_EQ(doc["pairs"][3]["q"], 4);
  EXPECT_EQ(doc["pairs"][3]["n"], 3);
  const auto text = run_cli({"--format", "text", "pairs", "--max-order", "10", "--include-trivial"});
  EXPECT_NE(text.out.find("(3, 2)"), std::string::npos);
  EXPECT_NE(text.out.find("[trivial]"), std::string::npos);
}

TEST(Cli, PairsCheck) {
  const auto bad = run_cli({"pairs", "--check", "3", "4"});
  EXPECT_EQ(bad.status, cli::kExitCheckFailed);
  EXPECT_EQ(bad.err, "invalid: condition iii\n");
  EXPECT_EQ(Json::parse(bad.out)["violated"], "iii");
  const auto good = run_cli({"--format", "text", "pairs", "--check", "3", "2"});
  EXPECT_EQ(good.status, cli::kExitOk);
  EXPECT_EQ(good.out, "valid\n");
}

TEST(Cli, Verify) {
  const auto ok = run_cli({"verify", "3", "2"});
  EXPECT_EQ(ok.status, cli::kExitOk);
  EXPECT_EQ(Json::parse(ok.out)["passed"], true);
  const auto alt = run_cli({"verify", "5", "2", "--generator", "7"});
  EXPECT_EQ(alt.status, cli::kExitOk);
  EXPECT_EQ(Json::parse(alt.out)["center"]["elements"], Json::parse(run_cli({"verify", "5", "2"}).out)["center"]["elements"]);
  const auto bad = run_cli({"verify", "6", "2"});
  EXPECT_EQ(bad.status, cli::kExitUsage);
  EXPECT_EQ(bad.err, "invalid: condition i\n");
  EXPECT_EQ(run_cli({"verify", "5", "2", "--generator", "2"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "31", "2", "--mode", "exhaustive"}).status, cli::kExitCheckFailed);
  const auto sampled = run_cli({"--seed", "7", "verify", "7", "2", "--mode", "sampled", "--samples", "5000"});
  EXPECT_EQ(sampled.status, cli::kExitOk);
  EXPECT_EQ(Json::parse(sampled.out)["seed"], 7);
  EXPECT_EQ(Json::parse(sampled.out)["mode"], "sampled");
}

TEST(Cli, Table) {
  const auto r = run_cli({"--format", "csv", "table", "3", "2"});
  EXPECT_EQ(r.status, cli::kExitOk);
  EXPECT_EQ(r.out.rfind("circle,0,1,2", 0), 0u);
  EXPECT_EQ(Json::parse(r.err)["generator"], 3);
  EXPECT_EQ(run_cli({"--export-cap", "10", "table", "4", "3"}).status, cli::kExitCheckFailed);
  EXPECT_EQ(run_cli({"table", "3", "4"}).status, cli::kExitUsage);
}

TEST(Cli, FieldInfoAndUsage) {
  const auto r = run_cli({"field-info", "9", "2"});
  EXPECT_EQ(r.status, cli::kExitOk);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["order"], 81);
  EXPECT_EQ(doc["field"]["modulus"], Json::parse("[2,1,0,0,1]"));
  EXPECT_EQ(doc["subfields"].size(), 3u);
  EXPECT_EQ(run_cli({}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "3"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--format", "yaml", "pairs"}).status, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).status, cli::kExitOk);
}

}  // namespace
}  // namespace dickson_lab
