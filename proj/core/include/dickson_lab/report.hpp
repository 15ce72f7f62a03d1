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

// Machine-readable documents: field specs, pair reports, verification reports
// and Cayley tables. Key order is fixed so output is byte-stable.

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dickson_lab/dickson.hpp"
#include "dickson_lab/field.hpp"
#include "dickson_lab/nearfield.hpp"
#include "dickson_lab/theorems.hpp"

namespace dickson_lab {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& spec);
/// Throws InvalidSpec on missing or mistyped keys.
FieldSpec field_spec_from_json(const Json& doc);

/// {"q", "p", "l", "n", "valid", "violated", "brackets_mod_n"}; p and l are
/// null when q is not a prime power.
Json pair_report(std::uint64_t q, std::uint64_t n);

Json to_json(const LawCheck& law);

/// The full verification document for a nearfield.
Json to_json(const DicksonNearfield& nf, const VerificationReport& report);

enum class CayleyOp { kAdd, kMul, kCircle };
enum class TableFormat { kCsv, kJson };

std::string_view cayley_op_name(CayleyOp op);

inline constexpr std::uint64_t kDefaultExportCap = 4096;

/// Full N x N operation table, rows and columns in ascending code order.
/// Throws CapExceeded above export_cap.
std::string export_cayley(const DicksonNearfield& nf, CayleyOp op, TableFormat format,
                          std::uint64_t export_cap = kDefaultExportCap);

}  // namespace dickson_lab
