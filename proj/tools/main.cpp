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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "commands.hpp"

using modinv::cli::Format;
using modinv::cli::RunConfig;

namespace {

void add_field_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--q", cfg.q, "Field order (a prime power)");
  cmd->add_option("--p", cfg.p, "Field characteristic");
  cmd->add_option("--e", cfg.e, "Extension degree (default 1)");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
  cmd->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

void add_group_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Number of variables");
  cmd->add_option("--m", cfg.m, "Frobenius exponent of the truncation");
  cmd->add_option("--alpha", cfg.alpha, "Composition of n selecting a parabolic subgroup, e.g. 2,1,3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of GL_n(F_q) and parabolic subgroups on truncated polynomial rings"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* hilbert = app.add_subcommand("hilbert", "Computed vs conjectured Hilbert series of the invariant ring");
  add_field_options(hilbert, cfg);
  add_group_options(hilbert, cfg);
  hilbert->add_option("--numerator-index", cfg.numerator_index, "Numerator start of the parabolic multinomial (0 or 1)");
  hilbert->add_option("--threads", cfg.threads, "Worker threads for per-degree work (0 = all cores)");
  hilbert->add_flag("--no-prefilter", cfg.no_prefilter, "Use every monomial as a candidate");
  add_output_options(hilbert, cfg);

  auto* basis = app.add_subcommand("basis", "Canonical invariant basis in one degree");
  add_field_options(basis, cfg);
  add_group_options(basis, cfg);
  basis->add_option("--degree", cfg.degree, "Degree")->required();
  basis->add_flag("--no-prefilter", cfg.no_prefilter, "Use every monomial as a candidate");
  add_output_options(basis, cfg);

  auto* families = app.add_subcommand("families", "Construct explicit invariant families");
  add_field_options(families, cfg);
  add_group_options(families, cfg);
  families->add_option("--family", cfg.family,
                       "dickson, zn, ynk, ykprime, amnk, s0, s1, spower, para, parb, parc, pard, q2step")
      ->required();
  families->add_option("--kprime", cfg.kprime, "Index k' of ykprime, amnk and q2step");
  families->add_option("--k", cfg.k, "Index k of ynk");
  families->add_option("--a", cfg.a, "Exponent of s1 in spower");
  families->add_option("--b", cfg.b, "Exponent of s0 in spower");
  families->add_option("--which", cfg.which, "Parabolic member: r,k for parb; r,s,k for parc; r for pard");
  families->add_flag("--verify", cfg.verify, "Check invariance, degrees and closed forms");
  add_output_options(families, cfg);

  auto* steenrod = app.add_subcommand("steenrod", "Steenrod operations on invariant families");
  add_field_options(steenrod, cfg);
  add_group_options(steenrod, cfg);
  steenrod->add_option("--which", cfg.which, "ops (default), generation or sum");
  steenrod->add_option("--family", cfg.family, "Family to operate on (ops mode)");
  steenrod->add_option("--kprime", cfg.kprime, "Index k'");
  steenrod->add_option("--k", cfg.k, "Index k of ynk");
  steenrod->add_option("--op", cfg.ops, "Operation indices i of P^i (default: all)")->delimiter(',');
  steenrod->add_option("--t", cfg.t_values, "Values of t for the sum check")->delimiter(',');
  steenrod->add_option("--r", cfg.r_values, "Values of r for the sum check")->delimiter(',');
  add_output_options(steenrod, cfg);

  auto* series = app.add_subcommand("series", "Conjectured Hilbert series and the f(t) analysis");
  add_field_options(series, cfg);
  add_group_options(series, cfg);
  series->add_option("--numerator-index", cfg.numerator_index, "Numerator start of the parabolic multinomial (0 or 1)");
  series->add_flag("--fpoly", cfg.fpoly, "Analyse f(t) = [3 over 2]_{q,t}");
  add_output_options(series, cfg);

  auto* lucas = app.add_subcommand("lucas", "Binomial coefficient mod p by Lucas' theorem");
  lucas->add_option("--p", cfg.p, "Prime")->required();
  lucas->add_option("--N", cfg.big_n, "Top")->required();
  lucas->add_option("--M", cfg.big_m, "Bottom")->required();
  add_output_options(lucas, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return modinv::cli::kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (cfg.out) {
    std::ofstream file(*cfg.out);
    if (!file) {
      std::cerr << "error: cannot open " << *cfg.out << '\n';
      return modinv::cli::kUsage;
    }
    return modinv::cli::run(cfg, file, std::cerr);
  }
  return modinv::cli::run(cfg, std::cout, std::cerr);
}
