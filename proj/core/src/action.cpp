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

#include "modinv/action.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace modinv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty composition");
  sums_.assign(parts_.size() + 1, 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("composition parts must be positive");
    sums_[i + 1] = sums_[i] + parts_[i];
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw std::invalid_argument("bad composition: " + std::string(token));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

namespace {

std::string label_of(std::string_view name, std::initializer_list<long long> args) {
  std::ostringstream os;
  os << name << '(';
  bool first = true;
  for (auto a : args) {
    os << (first ? "" : ",") << a;
    first = false;
  }
  os << ')';
  return os.str();
}

LabeledGenerator diag_gen(const FieldSpec& F, int n, int i, FieldElement c) {
  GFMatrix M = GFMatrix::identity(F, n);
  M.at(i - 1, i - 1) = c;
  return {label_of("diag", {i, c.code()}), std::move(M)};
}

LabeledGenerator swap_gen(const FieldSpec& F, int n, int i, int j) {
  GFMatrix M(F, n, n);
  for (int k = 1; k <= n; ++k) {
    const int image = k == i ? j : k == j ? i : k;
    M.at(image - 1, k - 1) = F.one();
  }
  return {label_of("swap", {i, j}), std::move(M)};
}

LabeledGenerator cycle_gen(const FieldSpec& F, int n) {
  GFMatrix M(F, n, n);
  for (int k = 1; k <= n; ++k) M.at(k % n, k - 1) = F.one();  // x_k -> x_{k+1}
  return {label_of("cycle", {n}), std::move(M)};
}

LabeledGenerator transvection_gen(const FieldSpec& F, int n, int i, int j) {
  GFMatrix M = GFMatrix::identity(F, n);
  M.at(j - 1, i - 1) = F.one();  // column i is x_i + x_j
  return {label_of("transvection", {i, j}), std::move(M)};
}

}  // namespace

GroupGeneratorSet gl_generators(const FieldSpec& F, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  GroupGeneratorSet set{F, n, GroupKind::General, std::nullopt, {}};
  if (F.q() > 2) set.generators.push_back(diag_gen(F, n, 1, F.primitive_element()));
  if (n >= 2) set.generators.push_back(swap_gen(F, n, 1, 2));
  if (n >= 3) set.generators.push_back(cycle_gen(F, n));
  if (n >= 2) set.generators.push_back(transvection_gen(F, n, 1, 2));
  return set;
}

GroupGeneratorSet parabolic_generators(const FieldSpec& F, const Composition& alpha) {
  const int n = alpha.n();
  GroupGeneratorSet set{F, n, GroupKind::Parabolic, alpha, {}};
  if (F.q() > 2)
    for (int b = 1; b <= alpha.length(); ++b)
      set.generators.push_back(diag_gen(F, n, alpha.partial_sum(b - 1) + 1, F.primitive_element()));
  for (int b = 1; b <= alpha.length(); ++b)
    for (int i = alpha.partial_sum(b - 1) + 1; i < alpha.partial_sum(b); ++i) set.generators.push_back(swap_gen(F, n, i, i + 1));
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) set.generators.push_back(transvection_gen(F, n, i, j));
  return set;
}

GFMatrix parse_generator_label(const FieldSpec& F, int n, std::string_view label) {
  const auto open = label.find('(');
  if (open == std::string_view::npos || label.back() != ')') throw std::invalid_argument("bad generator label");
  const std::string_view name = label.substr(0, open);
  std::string_view body = label.substr(open + 1, label.size() - open - 2);
  std::vector<long long> args;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto token = body.substr(0, comma);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw std::invalid_argument("bad generator label");
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  auto in_range = [n](long long i) { return i >= 1 && i <= n; };
  if (name == "diag" && args.size() == 2 && in_range(args[0]))
    return diag_gen(F, n, static_cast<int>(args[0]), F.element(static_cast<std::uint32_t>(args[1]))).matrix;
  if (name == "swap" && args.size() == 2 && in_range(args[0]) && in_range(args[1]))
    return swap_gen(F, n, static_cast<int>(args[0]), static_cast<int>(args[1])).matrix;
  if (name == "cycle" && args.size() == 1 && args[0] == n) return cycle_gen(F, n).matrix;
  if (name == "transvection" && args.size() == 2 && in_range(args[0]) && in_range(args[1]) && args[0] != args[1])
    return transvection_gen(F, n, static_cast<int>(args[0]), static_cast<int>(args[1])).matrix;
  throw std::invalid_argument("bad generator label: " + std::string(label));
}

bool is_invariant(const QPolynomial& f, const GroupGeneratorSet& gens) {
  if (f.ring().n != gens.n || !(f.field() == gens.field)) throw std::invalid_argument("ring/field mismatch");
  for (const auto& g : gens.generators)
    if (!(substitute_linear(f, g.matrix) == f)) return false;
  return true;
}

}  // namespace modinv
