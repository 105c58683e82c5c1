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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modinv::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

enum class Format { Table, Json };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;

  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  std::optional<int> e;

  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> alpha;
  std::optional<std::uint64_t> degree;

  std::optional<std::string> family;
  std::optional<std::uint64_t> kprime;
  std::optional<int> k;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<std::string> which;
  std::vector<std::uint64_t> ops;
  std::vector<int> t_values;
  std::vector<std::uint64_t> r_values;

  std::optional<std::uint64_t> big_n;  // lucas N
  std::optional<std::uint64_t> big_m;  // lucas M

  Format format = Format::Table;
  std::optional<std::string> out;
  int numerator_index = 0;
  unsigned threads = 1;
  bool verify = false;
  bool fpoly = false;
  bool no_prefilter = false;
};

/// Dispatches on cfg.command. Exit codes: 0 verified or match, 1 mismatch or
/// failed check, 2 invalid parameters.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_hilbert(const RunConfig& cfg, std::ostream& out);
int cmd_basis(const RunConfig& cfg, std::ostream& out);
int cmd_families(const RunConfig& cfg, std::ostream& out);
int cmd_steenrod(const RunConfig& cfg, std::ostream& out);
int cmd_series(const RunConfig& cfg, std::ostream& out);
int cmd_lucas(const RunConfig& cfg, std::ostream& out);

}  // namespace modinv::cli
