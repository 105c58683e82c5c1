// Copyright 2026 The modinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "modinv/action.hpp"
#include "modinv/invariants.hpp"
#include "modinv/qseries.hpp"
#include "modinv/steenrod.hpp"

namespace modinv::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Machine-sized integers stay numbers; anything wider becomes a decimal string.
Json big_json(const BigInt& v);
/// Dense coefficient list, degree 0 upward.
Json tpoly_json(const TPoly& t);
Json element_json(const FieldSpec& F, FieldElement a);
Json matrix_json(const GFMatrix& M);
Json polys_json(const std::vector<QPolynomial>& polys);
Json field_json(const FieldSpec& F);
Json generators_json(const GroupGeneratorSet& gens);

Json report_json(const InvariantReport& report, const GroupGeneratorSet& gens);
Json report_json(const GenerationReport& report, const FieldSpec& F);
Json report_json(const SumCheckReport& report);
Json report_json(const FSupportReport& report);

}  // namespace modinv::cli
