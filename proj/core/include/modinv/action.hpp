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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/linalg.hpp"
#include "modinv/ring.hpp"

namespace modinv {

/// Ordered block sizes (alpha_1, ..., alpha_l), all >= 1.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  /// Parses "2,1,3".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i - 1]; }  // 1-based
  int n() const { return partial_sum(length()); }
  /// A_i = alpha_1 + ... + alpha_i, with A_0 = 0.
  int partial_sum(int i) const { return sums_[i]; }
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  std::vector<int> sums_;
};

enum class GroupKind { General, Parabolic };

struct LabeledGenerator {
  std::string label;
  GFMatrix matrix;
};

/// Generators of GL_n(F_q) or of a parabolic subgroup P_alpha.
///
/// Labels form a small grammar that parse_generator_label() inverts:
///   diag(i,c)            x_i -> c x_i, c the field code of the scalar
///   swap(i,j)            exchange x_i and x_j
///   cycle(n)             x_1 -> x_2 -> ... -> x_n -> x_1
///   transvection(i,j)    x_i -> x_i + x_j
struct GroupGeneratorSet {
  FieldSpec field;
  int n = 0;
  GroupKind kind = GroupKind::General;
  std::optional<Composition> alpha;
  std::vector<LabeledGenerator> generators;
};

GroupGeneratorSet gl_generators(const FieldSpec& F, int n);
GroupGeneratorSet parabolic_generators(const FieldSpec& F, const Composition& alpha);

GFMatrix parse_generator_label(const FieldSpec& F, int n, std::string_view label);

/// True iff f is fixed by every generator.
bool is_invariant(const QPolynomial& f, const GroupGeneratorSet& gens);

}  // namespace modinv
