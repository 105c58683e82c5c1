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

#include <doctest.h>

#include <random>

#include "modinv/families.hpp"
#include "modinv/linalg.hpp"
#include "modinv/qseries.hpp"
#include "modinv/ring.hpp"
#include "oracles.hpp"

using namespace modinv;
using oracle::make_poly;

namespace {

RingSpec Q(std::uint64_t q, int n, int m) { return RingSpec::truncated(FieldSpec::of_order(q), n, m); }

}  // namespace

TEST_CASE("monomial_basis enumerates a graded piece leading-first") {
  const auto R = Q(2, 2, 2);
  CHECK(monomial_basis(R, 6) == std::vector<Monomial>{{3, 3}});
  CHECK(monomial_basis(R, 2) == std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(monomial_basis(R, 7).empty());
  CHECK(monomial_basis(R, 0) == std::vector<Monomial>{{0, 0}});
  CHECK_THROWS(monomial_basis(RingSpec::polynomial(R.field, 2), 1));
}

TEST_CASE("monomial_basis sizes add up to the ring dimension") {
  for (auto [q, n, m] : {std::tuple{2, 2, 2}, {3, 2, 2}, {2, 3, 3}, {4, 2, 1}, {3, 3, 1}}) {
    const auto R = Q(q, n, m);
    std::uint64_t total = 0;
    for (std::uint64_t d = 0; d <= R.top_degree() + 1; ++d) {
      const auto basis = monomial_basis(R, d);
      for (std::size_t i = 1; i < basis.size(); ++i) REQUIRE(grlex_less(basis[i], basis[i - 1]));
      total += basis.size();
    }
    CHECK(total == ipow(ipow(q, m), n));
  }
}

TEST_CASE("poly_mul examples") {
  const auto R2 = Q(2, 2, 2);
  const auto y0 = make_poly(R2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(poly_mul(y0, y0) == make_poly(R2, {{{2, 2}, 1}}));
  CHECK(poly_mul(make_poly(R2, {{{3, 0}, 1}}), QPolynomial::variable(R2, 0)).is_zero());

  const auto R3 = Q(3, 2, 2);
  const auto y0_3 = y_nk(R3.field, 2, 0);
  const auto y2_3 = y_nk(R3.field, 2, 2);
  CHECK(poly_mul(y0_3, y2_3) == make_poly(R3, {{{8, 8}, -1}}));
}

TEST_CASE("Frobenius truncation kills x_i^{q^m}") {
  for (auto [q, n, m] : {std::tuple{2, 2, 2}, {3, 3, 1}, {4, 2, 2}}) {
    const auto R = Q(q, n, m);
    for (int i = 0; i < n; ++i) {
      Monomial top = Monomial::unit(n);
      top[i] = static_cast<std::uint32_t>(R.cap() - 1);
      CHECK(poly_mul(QPolynomial::monomial(R, top), QPolynomial::variable(R, i)).is_zero());
    }
  }
}

TEST_CASE("substitute_linear examples") {
  const auto R = Q(2, 2, 2);
  const auto y0 = make_poly(R, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(substitute_linear(y0, GFMatrix::identity(R.field, 2)) == y0);
  // column 0 is the image of x1: x1 -> x1 + x2
  const auto T = GFMatrix::from_rows(R.field, {{1, 0}, {1, 1}});
  CHECK(substitute_linear(y0, T) == y0);
  const auto R1 = Q(2, 2, 1);
  CHECK(substitute_linear(QPolynomial::variable(R1, 0), T) == make_poly(R1, {{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("graded_component and project_to_Q examples") {
  const auto S = RingSpec::polynomial(FieldSpec::of_order(2), 2);
  const auto f = make_poly(S, {{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(graded_component(f, 2) == make_poly(S, {{{1, 1}, 1}}));
  CHECK(graded_component(QPolynomial(S), 3).is_zero());
  const auto y0 = y_nk(FieldSpec::of_order(3), 2, 0);
  CHECK(graded_component(y0, 6) == y0);

  const auto g = make_poly(S, {{{8, 0}, 1}, {{2, 2}, 1}});
  CHECK(project_to_Q(g, 3) == make_poly(RingSpec::truncated(S.field, 2, 3), {{{2, 2}, 1}}));
  const auto small = make_poly(S, {{{3, 1}, 1}, {{0, 2}, 1}});
  CHECK(project_to_Q(small, 2).terms() == small.terms());

  // x1^{2^{m+1}-2} + x1^{2^{m+1}-3} x2 + ... + x2^{2^{m+1}-2} over GF(2)
  for (int m = 1; m <= 4; ++m) {
    const std::uint32_t top = (2u << m) - 2;
    QPolynomial s(S);
    for (std::uint32_t i = 0; i <= top; ++i) s.add_term(Monomial{top - i, i}, S.field.one());
    const std::uint32_t half = (1u << m) - 1;
    CHECK(project_to_Q(s, m) == make_poly(RingSpec::truncated(S.field, 2, m), {{{half, half}, 1}}));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 3, 4}) {
    for (int n = 1; n <= 3; ++n) {
      for (bool capped : {true, false}) {
        const auto F = FieldSpec::of_order(q);
        const auto R = capped ? RingSpec::truncated(F, n, 2) : RingSpec::polynomial(F, n);
        for (int trial = 0; trial < 10; ++trial) {
          const auto f = oracle::random_poly(R, rng, 5, 9);
          const auto g = oracle::random_poly(R, rng, 5, 9);
          const auto h = oracle::random_poly(R, rng, 4, 9);
          REQUIRE(poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h)));
          REQUIRE(poly_mul(f, g) == poly_mul(g, f));
          REQUIRE(poly_mul(f, g + h) == poly_mul(f, g) + poly_mul(f, h));
          const auto M = oracle::random_matrix(F, n, rng);
          REQUIRE(substitute_linear(poly_mul(f, g), M) == poly_mul(substitute_linear(f, M), substitute_linear(g, M)));
        }
      }
    }
  }
}

TEST_CASE("substitution composes as f -> f(BA)") {
  const auto F = FieldSpec::of_order(2);
  const auto R = RingSpec::truncated(F, 2, 2);
  std::vector<GFMatrix> all;
  for (std::uint32_t code = 0; code < 16; ++code) {
    GFMatrix M(F, 2, 2);
    for (int c = 0; c < 4; ++c) M.at(c / 2, c % 2) = F.element((code >> c) & 1u);
    all.push_back(M);
  }
  std::mt19937_64 rng(3);
  std::vector<QPolynomial> polys;
  for (int i = 0; i < 4; ++i) polys.push_back(oracle::random_poly(R, rng, 6, 4));
  for (const auto& A : all)
    for (const auto& B : all)
      for (const auto& f : polys) REQUIRE(substitute_linear(substitute_linear(f, A), B) == substitute_linear(f, B * A));

  for (std::uint64_t q : {3, 4}) {
    const auto Fq = FieldSpec::of_order(q);
    const auto Rq = RingSpec::truncated(Fq, 3, 2);
    for (int trial = 0; trial < 20; ++trial) {
      const auto A = oracle::random_matrix(Fq, 3, rng), B = oracle::random_matrix(Fq, 3, rng);
      const auto f = oracle::random_poly(Rq, rng, 5, 6);
      REQUIRE(substitute_linear(substitute_linear(f, A), B) == substitute_linear(f, B * A));
    }
  }
}

TEST_CASE("project_to_Q is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2, 3}) {
    const auto S = RingSpec::polynomial(FieldSpec::of_order(q), 2);
    for (int m = 1; m <= 2; ++m)
      for (int trial = 0; trial < 20; ++trial) {
        const auto f = oracle::random_poly(S, rng, 5, 12), g = oracle::random_poly(S, rng, 5, 12);
        REQUIRE(project_to_Q(poly_mul(f, g), m) == poly_mul(project_to_Q(f, m), project_to_Q(g, m)));
        REQUIRE(project_to_Q(f + g, m) == project_to_Q(f, m) + project_to_Q(g, m));
      }
  }
}

TEST_CASE("products of the two-variable m=2 invariants") {
  for (std::uint64_t q : {2, 3, 4}) {
    const auto F = FieldSpec::of_order(q);
    const auto R = RingSpec::truncated(F, 2, 2);
    std::vector<QPolynomial> y;
    for (std::uint64_t k = 0; k <= q; ++k) y.push_back(y_nk(F, 2, static_cast<int>(k)));
    const auto z = z_n(F, 2);
    for (std::size_t i = 0; i <= q; ++i)
      for (std::size_t j = i; j <= q; ++j) {
        CAPTURE(q);
        CAPTURE(i);
        CAPTURE(j);
        const auto prod = poly_mul(y[i], y[j]);
        if (i == 0 && j == 0)
          CHECK(prod == y[q]);
        else if (i == 0 && j == 2)
          CHECK(prod == -z);
        else
          CHECK(prod.is_zero());
      }
  }
}

TEST_CASE("to_string formats") {
  const auto R = Q(3, 2, 2);
  CHECK(QPolynomial(R).to_string() == "0");
  CHECK(make_poly(R, {{{2, 1}, 1}, {{0, 3}, 2}, {{0, 0}, 1}}).to_string() == "x1^2*x2 + 2*x2^3 + 1");
  CHECK(scalar_ratio(make_poly(R, {{{1, 0}, 2}}), make_poly(R, {{{1, 0}, 1}})) == R.field.element(2));
  CHECK_FALSE(scalar_ratio(make_poly(R, {{{1, 0}, 1}}), make_poly(R, {{{0, 1}, 1}})).has_value());
}
