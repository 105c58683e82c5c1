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

#include "json_report.hpp"

#include <limits>

namespace modinv::cli {

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Json tpoly_json(const TPoly& t) {
  Json out = Json::array();
  for (const auto& c : t.dense()) out.push_back(big_json(c));
  return out;
}

Json element_json(const FieldSpec& F, FieldElement a) {
  if (F.is_prime_field()) return a.code();
  return F.coefficients(a);
}

Json matrix_json(const GFMatrix& M) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (const auto& a : M.row(r)) row.push_back(element_json(M.field(), a));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json polys_json(const std::vector<QPolynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json field_json(const FieldSpec& F) {
  const auto mod = F.modulus();
  return Json{{"q", F.q()}, {"p", F.p()}, {"e", F.e()}, {"modulus", std::vector<std::uint32_t>(mod.begin(), mod.end())}};
}

Json generators_json(const GroupGeneratorSet& gens) {
  Json out = Json::array();
  for (const auto& g : gens.generators) out.push_back({{"label", g.label}, {"matrix", matrix_json(g.matrix)}});
  return out;
}

Json report_json(const InvariantReport& report, const GroupGeneratorSet& gens) {
  Json params = field_json(report.ring.field);
  params["n"] = report.ring.n;
  params["m"] = *report.ring.m;
  params["group"] = report.kind == GroupKind::General ? "GL" : "parabolic";
  if (report.alpha) params["alpha"] = report.alpha->parts();
  params["generators"] = generators_json(gens);

  Json degrees = Json::array();
  for (const auto& rec : report.degrees)
    degrees.push_back({{"d", rec.degree}, {"dim", rec.dimension}, {"basis", polys_json(rec.basis)}});
  Json mismatches = Json::array();
  for (const auto& mm : report.mismatches)
    mismatches.push_back({{"d", mm.degree}, {"computed", big_json(mm.computed)}, {"conjectured", big_json(mm.conjectured)}});

  return Json{{"schema", kSchemaVersion},
              {"command", "hilbert"},
              {"params", std::move(params)},
              {"series", tpoly_json(report.computed)},
              {"degrees", std::move(degrees)},
              {"conjectured", tpoly_json(report.conjectured)},
              {"match", report.match},
              {"mismatches", std::move(mismatches)}};
}

Json report_json(const GenerationReport& report, const FieldSpec& F) {
  Json scalars = Json::array();
  for (const auto& e : report.edges)
    scalars.push_back({{"from", e.from}, {"op", e.op}, {"to", e.to}, {"scalar", element_json(F, e.scalar)}});
  Json reach = Json::object();
  for (const auto& [seed, got] : report.reach) reach[std::to_string(seed)] = got;
  Json claims = Json::array();
  for (const auto& c : report.claims)
    claims.push_back({{"seed", c.seed}, {"lo", c.lo}, {"hi", c.hi}, {"clipped", c.clipped}, {"holds", c.holds}});
  return Json{{"schema", kSchemaVersion},
              {"command", "steenrod"},
              {"inputs", {{"q", report.q}, {"m", report.m}, {"n", 2}, {"bound", report.bound}, {"seeds", report.seeds}}},
              {"reached", report.reached},
              {"reach", std::move(reach)},
              {"scalars", std::move(scalars)},
              {"claims", std::move(claims)},
              {"verdict", {{"all_reached", report.all_reached}, {"pattern_holds", report.pattern_holds}}}};
}

Json report_json(const SumCheckReport& report) {
  return Json{{"q", report.q}, {"m", report.m}, {"t", report.t}, {"r", report.r},
              {"upper", report.upper}, {"values", report.values}, {"independent", report.independent}};
}

Json report_json(const FSupportReport& report) {
  return Json{{"schema", kSchemaVersion},
              {"command", "series"},
              {"q", report.q},
              {"f", tpoly_json(report.f)},
              {"support", report.support},
              {"zero_one_coefficients", report.zero_one_coefficients},
              {"representability_matches", report.representability_matches},
              {"palindromic", report.palindromic},
              {"passed", report.passed()}};
}

}  // namespace modinv::cli
