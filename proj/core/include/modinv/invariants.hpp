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
#include <vector>

#include "modinv/action.hpp"
#include "modinv/qseries.hpp"
#include "modinv/ring.hpp"

namespace modinv {

struct InvariantOptions {
  /// Restrict candidates to monomials whose exponents are multiples of q - 1.
  /// Only valid when the generators include the torus.
  bool prefilter = true;
  /// Worker threads for per-degree work in hilbert_series; 0 means hardware concurrency.
  unsigned threads = 1;
  NumeratorIndex numerator = NumeratorIndex::FromZero;
};

/// The stacked (g - id) matrix for degree d: one column per candidate
/// monomial, one row per (generator, basis monomial) pair that is hit.
GFMatrix invariant_condition_matrix(const RingSpec& R, const GroupGeneratorSet& gens, std::uint64_t d,
                                    const std::vector<Monomial>& candidates);

/// Basis of the degree-d invariants of R under gens, in RREF normal form.
/// Empty outside [0, top_degree].
std::vector<QPolynomial> invariant_basis(const RingSpec& R, const GroupGeneratorSet& gens, std::uint64_t d,
                                         const InvariantOptions& opts = {});

/// RREF of the span of homogeneous degree-d polynomials, columns in
/// leading-first monomial order: leading coefficients are 1 and no basis
/// element contains another's leading monomial.
std::vector<QPolynomial> canonical_basis(const std::vector<QPolynomial>& polys, const RingSpec& R, std::uint64_t d);

struct DegreeRecord {
  std::uint64_t degree = 0;
  std::size_t dimension = 0;
  std::vector<QPolynomial> basis;
};

struct SeriesMismatch {
  std::uint64_t degree;
  BigInt computed;
  BigInt conjectured;
};

struct InvariantReport {
  RingSpec ring;
  GroupKind kind = GroupKind::General;
  std::optional<Composition> alpha;
  std::vector<DegreeRecord> degrees;
  TPoly computed;
  TPoly conjectured;
  bool match = false;
  std::vector<SeriesMismatch> mismatches;
};

/// Runs invariant_basis over every degree of R and compares against the
/// conjectured series for the group kind. Throws InexactDivision when the
/// parabolic formula with NumeratorIndex::FromOne does not divide.
InvariantReport hilbert_series(const RingSpec& R, const GroupGeneratorSet& gens, const InvariantOptions& opts = {});

/// Conjectured series for the group kind of gens in the ring R.
TPoly conjectured_for(const RingSpec& R, const GroupGeneratorSet& gens, NumeratorIndex numerator);

}  // namespace modinv
