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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "modinv/action.hpp"
#include "modinv/ring.hpp"

namespace modinv {

// Explicit invariant families of S = F_q[x_1..x_n] and its truncations.
//
// Naming: y_{n,k} and z_n live in the m = 2 ring; a_{m,n,k'} is the general
// "k = 1" family with exponent bound L = (q^m - q)/(q - 1); S_0 and S_1 are
// the two-variable Dickson images of degrees q^2 - q and q^2 - 1.

enum class FamilyTag { Dickson, Zn, Ynk, Ykprime, Amnk, S0, S1, SPower, ParA, ParB, ParC, ParD, Q2DicksonSeed };

std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view text);

/// L = (q^m - q) / (q - 1), the largest admissible k' for a_{m,n,k'}.
std::uint64_t kprime_bound(std::uint64_t q, int m);

/// Coefficients of t^0 .. t^{q^n} in prod_l (t + l(x)) over all q^n linear
/// functionals l, as polynomials in the uncapped ring.
std::vector<QPolynomial> functional_product(const FieldSpec& F, int n);

/// D_{n,0}, ..., D_{n,n}: the coefficient of t^{q^i} in functional_product.
/// Throws std::logic_error if a non-q-power t coefficient is nonzero.
std::vector<QPolynomial> dickson(const FieldSpec& F, int n);

/// sum over (i_1..i_r) in [0, bound]^r with sum = target of
/// prod_j x_{vars[j]}^{i_j (q-1)}; vars are zero-based indices into ring.
QPolynomial bounded_exponent_sum(const RingSpec& ring, std::span<const int> vars, std::uint64_t target,
                                 std::uint64_t bound);

/// prod_i x_i^{q^2 - 1} in the m = 2 ring.
QPolynomial z_n(const FieldSpec& F, int n);
/// y_{n,k} in the m = 2 ring; zero for k > q.
QPolynomial y_nk(const FieldSpec& F, int n, int k);
/// a_{m,n,k'} in the m-capped ring; throws for k' outside [0, L].
QPolynomial a_mnk(const FieldSpec& F, int m, int n, std::uint64_t kprime);

/// Checks a_{m,n,k'} = sum_{i=k'}^{L} a_{m,n-1,L+k'-i} x_n^{i(q-1)} for n >= 2.
/// With m = 2 this is the y_{n,k} recurrence.
bool a_recurrence_check(const FieldSpec& F, int m, int n, std::uint64_t kprime);

/// Checks (x1^{q-1} - x2^{q-1}) y_k = x1^{k(q-1)} x2^{k(q-1)} (x1^{(q-k+1)(q-1)} - x2^{(q-k+1)(q-1)})
/// in the uncapped two-variable ring.
bool y_closed_form_check(const FieldSpec& F, int k);

struct SImages {
  QPolynomial s0;
  QPolynomial s1;
};

/// S_0 and S_1 in the uncapped two-variable ring.
SImages s_polynomials(const FieldSpec& F);
/// S_0 and S_1 projected to the m-capped two-variable ring (m >= 2).
SImages s_images(const FieldSpec& F, int m);
/// S_1^a S_0^b in the m = 3 ring; requires a <= q, b <= q - 1.
QPolynomial s_power(const FieldSpec& F, int a, int b);

struct ParA {};
struct ParB {
  int r, k;
};
struct ParC {
  int r, s, k;
};
struct ParD {
  int r;
};
using ParabolicMember = std::variant<ParA, ParB, ParC, ParD>;

std::string to_string(const ParabolicMember& which);
/// Parses "a", "b:r,k", "c:r,s,k" or "d:r".
ParabolicMember parse_parabolic_member(std::string_view text);

/// The m = 2 parabolic families a_n, b_{r,k}, c_{r,s,k}, d_r.
QPolynomial parabolic_family(const FieldSpec& F, const Composition& alpha, const ParabolicMember& which);
std::uint64_t parabolic_family_degree(std::uint64_t q, const Composition& alpha, const ParabolicMember& which);

/// (x1^2 + x1 x2 + x2^2) f in the q = 2, n = 2 ring of f.
QPolynomial q2_dickson_step(const FieldSpec& F, int m, const QPolynomial& f);

/// The unique (u, v) >= 0 with a = u(q^2 - 1) + v(q^2 - q), if any.
/// Requires 0 <= a <= q^3 - q^2.
std::optional<std::pair<std::uint64_t, std::uint64_t>> rep_decompose(std::uint64_t q, std::uint64_t a);

}  // namespace modinv
