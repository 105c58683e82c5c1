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
#include <map>
#include <optional>
#include <vector>

#include "modinv/ring.hpp"

namespace modinv {

/// P(xi)(f) = f(x_1 + x_1^q xi, ..., x_n + x_n^q xi) split by xi-degree.
struct SteenrodExpansion {
  std::vector<QPolynomial> components;  // components[i] = P^i(f)
};

SteenrodExpansion total_steenrod(const QPolynomial& f);

/// P^i(f); zero once i exceeds deg f.
QPolynomial steenrod_p(const QPolynomial& f, std::uint64_t i);

/// P^r(a_from) = scalar * a_to with a nonzero scalar.
struct SteenrodEdge {
  std::uint64_t from;
  std::uint64_t op;
  std::uint64_t to;
  FieldElement scalar;
};

/// A claimed range [lo, hi] of indices generated by one seed, clipped to [0, L].
struct ClaimedRange {
  std::uint64_t seed;
  std::uint64_t lo;
  std::uint64_t hi;
  bool clipped = false;
  bool holds = false;
};

struct GenerationReport {
  std::uint64_t q = 0;
  int m = 0;
  std::uint64_t bound = 0;                  // L; the family is a_0 .. a_L
  std::vector<std::uint64_t> seeds;         // indices of B
  std::vector<SteenrodEdge> edges;          // every P^r image that is a family multiple
  std::map<std::uint64_t, std::vector<std::uint64_t>> reach;  // seed -> indices reached by chains of edges
  std::vector<std::uint64_t> reached;       // union over seeds
  std::vector<ClaimedRange> claims;
  bool all_reached = false;
  bool pattern_holds = false;
};

/// Closure of the n = 2 family a_{m,2,k'} under Steenrod operations starting
/// from a_0 and a_{1 + (q^t - 1)/(q - 1)}, 1 <= t <= m - 1.
GenerationReport steenrod_generation_report(const FieldSpec& F, int m);

struct SumCheckReport {
  std::uint64_t q = 0;
  int m = 0;
  int t = 0;
  std::uint64_t r = 0;
  std::uint64_t upper = 0;  // summation bound (q^m - q^t - 2q + 2)/(q - 1)
  std::vector<std::uint32_t> values;  // one per j in [0, r]
  bool independent = false;
};

/// Evaluates, for each j in [0, r],
///   sum_{i=0}^{U} C((q-1)(L-i), j) C((q-1)((q^t+q-2)/(q-1) + i), r-j) mod p
/// and reports whether the values agree.
SumCheckReport binomial_sum_check(std::uint64_t q, int m, int t, std::uint64_t r);

}  // namespace modinv
