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

#include "commands.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json_report.hpp"
#include "modinv/families.hpp"
#include "modinv/invariants.hpp"
#include "modinv/qseries.hpp"
#include "modinv/steenrod.hpp"

namespace modinv::cli {

namespace {

FieldSpec resolve_field(const RunConfig& cfg) {
  if (cfg.q) {
    const auto pe = prime_power(*cfg.q);
    if (!pe) throw UsageError("--q " + std::to_string(*cfg.q) + " is not a prime power");
    if ((cfg.p && *cfg.p != pe->first) || (cfg.e && *cfg.e != pe->second))
      throw UsageError("--q disagrees with --p/--e");
    return FieldSpec::make(pe->first, pe->second);
  }
  if (cfg.p) return FieldSpec::make(*cfg.p, cfg.e.value_or(1));
  throw UsageError("one of --q or --p is required");
}

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

int require_positive(const std::optional<int>& v, const char* flag) {
  const int x = require(v, flag);
  if (x < 1) throw UsageError(std::string(flag) + " must be >= 1");
  return x;
}

NumeratorIndex numerator_of(const RunConfig& cfg) {
  if (cfg.numerator_index != 0 && cfg.numerator_index != 1) throw UsageError("--numerator-index must be 0 or 1");
  return static_cast<NumeratorIndex>(cfg.numerator_index);
}

struct GroupChoice {
  RingSpec ring;
  GroupGeneratorSet gens;
};

GroupChoice resolve_group(const RunConfig& cfg, const FieldSpec& F) {
  const int m = require_positive(cfg.m, "--m");
  if (cfg.alpha) {
    const Composition alpha = Composition::parse(*cfg.alpha);
    if (cfg.n && *cfg.n != alpha.n()) throw UsageError("--n disagrees with the sum of --alpha");
    return {RingSpec::truncated(F, alpha.n(), m), parabolic_generators(F, alpha)};
  }
  const int n = require_positive(cfg.n, "--n");
  return {RingSpec::truncated(F, n, m), gl_generators(F, n)};
}

std::string group_label(const GroupChoice& g) {
  if (g.gens.kind == GroupKind::General) return "GL";
  return "parabolic(" + g.gens.alpha->to_string() + ")";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

// ---- families --------------------------------------------------------------

struct FamilyItem {
  std::string name;
  QPolynomial poly;
  std::optional<std::uint64_t> degree;  // expected; nullopt means the zero polynomial
};

struct FamilyCheck {
  std::string name;
  bool passed;
};

struct FamilyBuild {
  std::vector<FamilyItem> items;
  std::optional<GroupGeneratorSet> group;
  std::vector<FamilyCheck> extra;  // closed forms, recurrences, identities
};

std::string member_text(FamilyTag tag, const std::string& which) {
  if (which.find(':') != std::string::npos) return which;
  switch (tag) {
    case FamilyTag::ParA: return "a";
    case FamilyTag::ParB: return "b:" + which;
    case FamilyTag::ParC: return "c:" + which;
    default: return "d:" + which;
  }
}

FamilyBuild build_family(const RunConfig& cfg, const FieldSpec& F, bool with_checks) {
  const auto tag_text = require(cfg.family, "--family");
  const auto tag = parse_family_tag(tag_text);
  if (!tag) throw UsageError("unknown family: " + tag_text);
  const std::uint64_t q = F.q();
  FamilyBuild out;

  switch (*tag) {
    case FamilyTag::Dickson: {
      const int n = require_positive(cfg.n, "--n");
      const auto d = dickson(F, n);
      for (int i = 0; i <= n; ++i)
        out.items.push_back({"dickson(n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")", d[i], ipow(q, n) - ipow(q, i)});
      out.group = gl_generators(F, n);
      break;
    }
    case FamilyTag::Zn: {
      const int n = require_positive(cfg.n, "--n");
      out.items.push_back({"zn(n=" + std::to_string(n) + ")", z_n(F, n), n * (q * q - 1)});
      out.group = gl_generators(F, n);
      break;
    }
    case FamilyTag::Ynk: {
      const int n = require_positive(cfg.n, "--n");
      const int k = require(cfg.k, "--k");
      if (k < 0) throw UsageError("--k must be >= 0");
      std::optional<std::uint64_t> deg;
      if (static_cast<std::uint64_t>(k) <= q) deg = ((n - 1) * q + k) * (q - 1);
      out.items.push_back({"ynk(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", y_nk(F, n, k), deg});
      out.group = gl_generators(F, n);
      if (with_checks && n >= 2 && deg) out.extra.push_back({"recurrence", a_recurrence_check(F, 2, n, k)});
      break;
    }
    case FamilyTag::Ykprime:
    case FamilyTag::Amnk: {
      const int m = require_positive(cfg.m, "--m");
      const int n = *tag == FamilyTag::Ykprime ? 2 : require_positive(cfg.n, "--n");
      const std::uint64_t kp = require(cfg.kprime, "--kprime");
      const std::uint64_t deg = (n - 1) * (ipow(q, m) - q) + kp * (q - 1);
      out.items.push_back({"amnk(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",k'=" + std::to_string(kp) + ")",
                           a_mnk(F, m, n, kp), deg});
      out.group = gl_generators(F, n);
      if (with_checks && n >= 2) out.extra.push_back({"recurrence", a_recurrence_check(F, m, n, kp)});
      if (with_checks && n == 2 && m == 2) out.extra.push_back({"closed_form", y_closed_form_check(F, static_cast<int>(kp))});
      break;
    }
    case FamilyTag::S0:
    case FamilyTag::S1: {
      const int m = cfg.m.value_or(3);
      const auto images = s_images(F, m);
      const bool zero = *tag == FamilyTag::S0;
      out.items.push_back({zero ? "s0" : "s1", zero ? images.s0 : images.s1, zero ? q * q - q : q * q - 1});
      out.group = gl_generators(F, 2);
      if (with_checks) {
        const auto [s0, s1] = s_polynomials(F);
        const RingSpec S = s0.ring();
        if (zero) {
          const auto x1 = QPolynomial::variable(S, 0), x2 = QPolynomial::variable(S, 1);
          const bool identity = poly_mul(poly_pow(x1, q - 1) - poly_pow(x2, q - 1), s0) ==
                                poly_pow(x1, q * q - 1) - poly_pow(x2, q * q - 1);
          out.extra.push_back({"quotient_identity", identity});
        }
        if (q * q <= 4096) {
          const auto d = dickson(F, 2);
          const auto ratio = scalar_ratio(zero ? s0 : s1, zero ? d[1] : d[0]);
          out.extra.push_back({"dickson_multiple", ratio && !ratio->is_zero()});
        }
      }
      break;
    }
    case FamilyTag::SPower: {
      const int a = require(cfg.a, "--a"), b = require(cfg.b, "--b");
      out.items.push_back({"spower(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")", s_power(F, a, b),
                           a * (q * q - 1) + b * (q * q - q)});
      out.group = gl_generators(F, 2);
      if (with_checks) out.extra.push_back({"nonzero", !out.items.back().poly.is_zero()});
      break;
    }
    case FamilyTag::ParA:
    case FamilyTag::ParB:
    case FamilyTag::ParC:
    case FamilyTag::ParD: {
      const Composition alpha = Composition::parse(require(cfg.alpha, "--alpha"));
      const auto member = parse_parabolic_member(
          member_text(*tag, *tag == FamilyTag::ParA ? cfg.which.value_or("a") : require(cfg.which, "--which")));
      out.items.push_back({"par" + to_string(member), parabolic_family(F, alpha, member),
                           parabolic_family_degree(q, alpha, member)});
      out.group = parabolic_generators(F, alpha);
      break;
    }
    case FamilyTag::Q2DicksonSeed: {
      const int m = require_positive(cfg.m, "--m");
      const std::uint64_t kp = require(cfg.kprime, "--kprime");
      if (q != 2) throw UsageError("q2step requires q = 2");
      const std::uint64_t L = kprime_bound(q, m);
      if (kp + 2 > L) throw UsageError("--kprime must be at most 2^m - 4");
      const auto seed = a_mnk(F, m, 2, kp);
      const auto stepped = q2_dickson_step(F, m, seed);
      out.items.push_back({"q2step(m=" + std::to_string(m) + ",k'=" + std::to_string(kp) + ")", stepped,
                           (ipow(q, m) - q) + (kp + 2) * (q - 1)});
      out.group = gl_generators(F, 2);
      if (with_checks) out.extra.push_back({"recurrence", stepped == a_mnk(F, m, 2, kp + 2)});
      break;
    }
  }
  return out;
}

std::vector<FamilyCheck> item_checks(const FamilyItem& item, const GroupGeneratorSet& gens) {
  std::vector<FamilyCheck> checks;
  checks.push_back({"invariant", is_invariant(item.poly, gens)});
  if (item.degree)
    checks.push_back({"degree", !item.poly.is_zero() && item.poly.is_homogeneous() &&
                                    static_cast<std::uint64_t>(item.poly.degree()) == *item.degree});
  else
    checks.push_back({"zero", item.poly.is_zero()});
  return checks;
}

}  // namespace

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec F = resolve_field(cfg);
  const auto g = resolve_group(cfg, F);
  InvariantOptions opts;
  opts.prefilter = !cfg.no_prefilter;
  opts.threads = cfg.threads;
  opts.numerator = numerator_of(cfg);
  const auto report = hilbert_series(g.ring, g.gens, opts);

  if (cfg.format == Format::Json) {
    print_json(out, report_json(report, g.gens));
    return report.match ? kOk : kFailure;
  }
  out << "hilbert q=" << F.q() << " n=" << g.ring.n << " m=" << *g.ring.m << " group=" << group_label(g) << '\n';
  out << std::setw(8) << "degree" << std::setw(10) << "computed" << std::setw(13) << "conjectured" << '\n';
  for (std::uint64_t d = 0; d < report.degrees.size(); ++d) {
    const BigInt c = report.computed.coefficient(d), e = report.conjectured.coefficient(d);
    if (c == 0 && e == 0) continue;
    out << std::setw(8) << d << std::setw(10) << c << std::setw(13) << e << (c != e ? "  *" : "") << '\n';
  }
  out << "computed:    " << report.computed.to_string() << '\n';
  out << "conjectured: " << report.conjectured.to_string() << '\n';
  out << "match: " << yes_no(report.match) << '\n';
  return report.match ? kOk : kFailure;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec F = resolve_field(cfg);
  const auto g = resolve_group(cfg, F);
  const std::uint64_t d = require(cfg.degree, "--degree");
  InvariantOptions opts;
  opts.prefilter = !cfg.no_prefilter;
  const auto basis = invariant_basis(g.ring, g.gens, d, opts);
  if (cfg.format == Format::Json) {
    Json params = field_json(F);
    params["n"] = g.ring.n;
    params["m"] = *g.ring.m;
    params["group"] = g.gens.kind == GroupKind::General ? "GL" : "parabolic";
    if (g.gens.alpha) params["alpha"] = g.gens.alpha->parts();
    print_json(out, Json{{"schema", kSchemaVersion}, {"command", "basis"}, {"params", std::move(params)},
                         {"d", d}, {"dim", basis.size()}, {"basis", polys_json(basis)}});
    return kOk;
  }
  for (const auto& p : basis) out << p.to_string() << '\n';
  return kOk;
}

int cmd_families(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec F = resolve_field(cfg);
  const auto build = build_family(cfg, F, cfg.verify);
  bool ok = true;
  std::vector<std::vector<FamilyCheck>> per_item;
  for (const auto& item : build.items) {
    per_item.push_back(cfg.verify ? item_checks(item, *build.group) : std::vector<FamilyCheck>{});
    for (const auto& c : per_item.back()) ok = ok && c.passed;
  }
  for (const auto& c : build.extra) ok = ok && c.passed;

  if (cfg.format == Format::Json) {
    Json items = Json::array();
    for (std::size_t i = 0; i < build.items.size(); ++i) {
      const auto& item = build.items[i];
      Json j{{"name", item.name}, {"degree", item.poly.degree()}, {"poly", item.poly.to_string()}};
      if (cfg.verify) {
        Json checks = Json::object();
        for (const auto& c : per_item[i]) checks[c.name] = c.passed;
        j["checks"] = std::move(checks);
      }
      items.push_back(std::move(j));
    }
    Json j{{"schema", kSchemaVersion}, {"command", "families"}, {"family", *cfg.family}, {"field", field_json(F)}, {"items", std::move(items)}};
    if (cfg.verify) {
      Json extra = Json::object();
      for (const auto& c : build.extra) extra[c.name] = c.passed;
      j["checks"] = std::move(extra);
      j["passed"] = ok;
    }
    print_json(out, j);
    return ok ? kOk : kFailure;
  }
  for (std::size_t i = 0; i < build.items.size(); ++i) {
    const auto& item = build.items[i];
    out << item.name << " [degree " << item.poly.degree() << "]: " << item.poly.to_string() << '\n';
    for (const auto& c : per_item[i]) out << "  " << c.name << ": " << (c.passed ? "ok" : "FAIL") << '\n';
  }
  for (const auto& c : build.extra) out << c.name << ": " << (c.passed ? "ok" : "FAIL") << '\n';
  if (cfg.verify) out << "verified: " << yes_no(ok) << '\n';
  return ok ? kOk : kFailure;
}

namespace {

int steenrod_generation(const RunConfig& cfg, const FieldSpec& F, std::ostream& out) {
  const auto rep = steenrod_generation_report(F, require_positive(cfg.m, "--m"));
  if (cfg.format == Format::Json) {
    print_json(out, report_json(rep, F));
  } else {
    out << "steenrod generation q=" << rep.q << " m=" << rep.m << " n=2 L=" << rep.bound << '\n';
    for (const auto& e : rep.edges)
      out << "  P^" << e.op << "(a_" << e.from << ") = " << F.format(e.scalar) << " * a_" << e.to << '\n';
    for (const auto& [seed, got] : rep.reach) out << "reach(a_" << seed << ") = " << join(got) << '\n';
    for (const auto& c : rep.claims)
      out << "claim a_" << c.seed << " -> [" << c.lo << ", " << c.hi << "]" << (c.clipped ? " (clipped)" : "") << ": "
          << (c.holds ? "holds" : "fails") << '\n';
    out << "all reached: " << yes_no(rep.all_reached) << '\n';
    out << "pattern holds: " << yes_no(rep.pattern_holds) << '\n';
  }
  return rep.pattern_holds ? kOk : kFailure;
}

int steenrod_sum(const RunConfig& cfg, const FieldSpec& F, std::ostream& out) {
  const int m = require_positive(cfg.m, "--m");
  std::vector<int> ts = cfg.t_values;
  if (ts.empty())
    for (int t = 1; t <= m - 1; ++t) ts.push_back(t);
  std::vector<std::uint64_t> rs = cfg.r_values;
  if (rs.empty())
    for (std::uint64_t r = 0; r <= F.q(); ++r) rs.push_back(r);
  bool all = true;
  Json rows = Json::array();
  std::ostringstream table;
  table << std::setw(4) << "t" << std::setw(4) << "r" << std::setw(7) << "upper" << "  values  independent\n";
  for (int t : ts)
    for (std::uint64_t r : rs) {
      const auto rep = binomial_sum_check(F.q(), m, t, r);
      all = all && rep.independent;
      rows.push_back(report_json(rep));
      std::ostringstream vals;
      for (std::size_t i = 0; i < rep.values.size(); ++i) vals << (i ? "," : "") << rep.values[i];
      table << std::setw(4) << t << std::setw(4) << r << std::setw(7) << rep.upper << "  " << vals.str() << "  "
            << yes_no(rep.independent) << '\n';
    }
  if (cfg.format == Format::Json)
    print_json(out, Json{{"schema", kSchemaVersion}, {"command", "steenrod"}, {"inputs", {{"q", F.q()}, {"m", m}}},
                         {"sums", std::move(rows)}, {"verdict", {{"independent", all}}}});
  else
    out << table.str() << "independent everywhere: " << yes_no(all) << '\n';
  return all ? kOk : kFailure;
}

}  // namespace

int cmd_steenrod(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec F = resolve_field(cfg);
  const std::string which = cfg.which.value_or("ops");
  if (which == "generation") return steenrod_generation(cfg, F, out);
  if (which == "sum") return steenrod_sum(cfg, F, out);
  if (which != "ops") throw UsageError("--which must be ops, generation or sum");

  RunConfig local = cfg;
  if (!local.family) throw UsageError("--family is required");
  if ((*local.family == "ykprime" || *local.family == "amnk") && !local.m) throw UsageError("--m is required");
  const auto build = build_family(local, F, false);
  const auto tag = parse_family_tag(*local.family);
  const bool indexed = tag == FamilyTag::Ykprime || tag == FamilyTag::Amnk;

  Json images = Json::array();
  std::ostringstream table;
  for (const auto& item : build.items) {
    const auto expansion = total_steenrod(item.poly);
    std::vector<std::uint64_t> ops = cfg.ops;
    if (ops.empty())
      for (std::uint64_t i = 0; i < expansion.components.size(); ++i) ops.push_back(i);
    for (std::uint64_t op : ops) {
      const QPolynomial image = op < expansion.components.size() ? expansion.components[op] : QPolynomial(item.poly.ring());
      Json j{{"source", item.name}, {"op", op}, {"poly", image.to_string()}};
      table << "P^" << op << "(" << item.name << ") = " << image.to_string() << '\n';
      if (indexed) {
        const int m = *local.m;
        const int n = tag == FamilyTag::Ykprime ? 2 : *local.n;
        const std::uint64_t target = *local.kprime + op;
        if (target <= kprime_bound(F.q(), m)) {
          const auto c = scalar_ratio(image, a_mnk(F, m, n, target));
          j["target_kprime"] = target;
          j["scalar"] = c ? element_json(F, *c) : Json(nullptr);
          table << "  scalar vs k'=" << target << ": " << (c ? F.format(*c) : std::string("not a multiple")) << '\n';
        }
      }
      images.push_back(std::move(j));
    }
  }
  if (cfg.format == Format::Json) {
    Json inputs = field_json(F);
    inputs["family"] = *local.family;
    if (local.m) inputs["m"] = *local.m;
    if (local.n) inputs["n"] = *local.n;
    if (local.kprime) inputs["kprime"] = *local.kprime;
    print_json(out, Json{{"schema", kSchemaVersion}, {"command", "steenrod"}, {"inputs", std::move(inputs)}, {"images", std::move(images)}});
  } else {
    out << table.str();
  }
  return kOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec F = resolve_field(cfg);
  const std::uint64_t q = F.q();
  if (cfg.fpoly) {
    const auto rep = f_support_analysis(q);
    if (cfg.format == Format::Json) {
      print_json(out, report_json(rep));
    } else {
      out << "f(t) = " << rep.f.to_string() << '\n';
      out << "support: " << join(rep.support) << '\n';
      out << "0/1 coefficients: " << yes_no(rep.zero_one_coefficients) << '\n';
      out << "representability: " << yes_no(rep.representability_matches) << '\n';
      out << "palindromic: " << yes_no(rep.palindromic) << '\n';
    }
    return rep.passed() ? kOk : kFailure;
  }

  const int m = require_positive(cfg.m, "--m");
  Json terms = Json::array();
  std::ostringstream table;
  TPoly total;
  if (cfg.alpha) {
    const Composition alpha = Composition::parse(*cfg.alpha);
    const NumeratorIndex start = numerator_of(cfg);
    for (const auto& beta : enumerate_betas(alpha, m)) {
      const std::uint64_t e = parabolic_exponent(m, alpha, beta, q);
      TPoly mult;
      try {
        mult = gaussian_multinomial(m, beta, q, start);
      } catch (const InexactDivision&) {
        throw std::domain_error("inexact division for beta=" + beta.to_string());
      }
      const TPoly term = mult.shifted(e);
      total += term;
      terms.push_back({{"beta", beta.parts()}, {"exponent", e}, {"multinomial", tpoly_json(mult)}, {"term", tpoly_json(term)}});
      table << std::setw(12) << beta.to_string() << std::setw(6) << e << "  t^" << e << " * (" << mult.to_string() << ")\n";
    }
  } else {
    const int n = require_positive(cfg.n, "--n");
    for (int k = 0; k <= std::min(n, m); ++k) {
      const std::uint64_t e = static_cast<std::uint64_t>(n - k) * (ipow(q, m) - ipow(q, k));
      const TPoly mult = qbinom(m, k, q);
      total += mult.shifted(e);
      terms.push_back({{"k", k}, {"exponent", e}, {"qbinom", tpoly_json(mult)}, {"term", tpoly_json(mult.shifted(e))}});
      table << std::setw(4) << k << std::setw(6) << e << "  t^" << e << " * (" << mult.to_string() << ")\n";
    }
  }
  if (cfg.format == Format::Json) {
    Json params = field_json(F);
    params["m"] = m;
    if (cfg.alpha) {
      params["alpha"] = Composition::parse(*cfg.alpha).parts();
      params["numerator_index"] = cfg.numerator_index;
    } else {
      params["n"] = *cfg.n;
    }
    print_json(out, Json{{"schema", kSchemaVersion}, {"command", "series"}, {"params", std::move(params)},
                         {"terms", std::move(terms)}, {"series", tpoly_json(total)}});
  } else {
    out << table.str() << "series: " << total.to_string() << '\n';
  }
  return kOk;
}

int cmd_lucas(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t p = require(cfg.p, "--p");
  if (!is_prime(p)) throw UsageError("--p must be prime");
  const std::uint64_t N = require(cfg.big_n, "--N"), M = require(cfg.big_m, "--M");
  const auto v = lucas_binomial(N, M, static_cast<std::uint32_t>(p));
  if (cfg.format == Format::Json)
    print_json(out, Json{{"schema", kSchemaVersion}, {"command", "lucas"}, {"p", p}, {"N", N}, {"M", M}, {"value", v}});
  else
    out << v << '\n';
  return kOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "hilbert") return cmd_hilbert(cfg, out);
    if (cfg.command == "basis") return cmd_basis(cfg, out);
    if (cfg.command == "families") return cmd_families(cfg, out);
    if (cfg.command == "steenrod") return cmd_steenrod(cfg, out);
    if (cfg.command == "series") return cmd_series(cfg, out);
    if (cfg.command == "lucas") return cmd_lucas(cfg, out);
    throw UsageError("unknown command: " + cfg.command);
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace modinv::cli
