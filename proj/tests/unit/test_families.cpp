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

#include <algorithm>
#include <set>

#include "modinv/families.hpp"
#include "modinv/invariants.hpp"
#include "modinv/qseries.hpp"
#include "oracles.hpp"

using namespace modinv;
using oracle::make_poly;

namespace {

// Sum of all monomials of degree (n-1)L(q-1) + k'(q-1) whose exponents are
// multiples of q - 1 no larger than L(q-1), found by scanning the full basis.
QPolynomial scanned_a(const FieldSpec& F, int m, int n, std::uint64_t kprime) {
  const std::uint64_t q = F.q(), L = kprime_bound(q, m);
  const auto R = RingSpec::truncated(F, n, m);
  QPolynomial out(R);
  for (const auto& mono : monomial_basis(R, ((n - 1) * L + kprime) * (q - 1))) {
    const auto e = mono.exponents();
    if (std::all_of(e.begin(), e.end(), [&](std::uint32_t x) { return x % (q - 1) == 0 && x <= L * (q - 1); }))
      out.add_term(mono, F.one());
  }
  return out;
}

QPolynomial x_pow(const RingSpec& R, int var, std::uint64_t e) {
  Monomial mono = Monomial::unit(R.n);
  mono[var] = static_cast<std::uint32_t>(e);
  return QPolynomial::monomial(R, mono);
}

}  // namespace

TEST_CASE("dickson examples") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto F = FieldSpec::of_order(q);
    const auto D = dickson(F, 1);
    REQUIRE(D.size() == 2);
    const auto S = RingSpec::polynomial(F, 1);
    CHECK(D[0] == -x_pow(S, 0, q - 1));
    CHECK(D[1] == QPolynomial::constant(S, F.one()));
  }
  const auto F2 = FieldSpec::of_order(2);
  const auto S2 = RingSpec::polynomial(F2, 2);
  const auto D = dickson(F2, 2);
  REQUIRE(D.size() == 3);
  CHECK(D[0] == make_poly(S2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  CHECK(D[1] == make_poly(S2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK(D[2] == QPolynomial::constant(S2, F2.one()));
}

TEST_CASE("functional product vanishes off q-powers of t and gives invariant Dickson polynomials") {
  for (auto [q, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 2}, {2, 3}}) {
    const auto F = FieldSpec::of_order(q);
    const auto coeffs = functional_product(F, n);
    REQUIRE(coeffs.size() == ipow(q, n) + 1);
    std::set<std::uint64_t> powers;
    for (int i = 0; i <= n; ++i) powers.insert(ipow(q, i));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!powers.count(k)) REQUIRE(coeffs[k].is_zero());
    const auto D = dickson(F, n);
    REQUIRE(D.size() == static_cast<std::size_t>(n + 1));
    const auto gens = gl_generators(F, n);
    for (int i = 0; i <= n; ++i) {
      CHECK(D[i].is_homogeneous());
      CHECK(D[i].degree() == static_cast<long long>(ipow(q, n) - ipow(q, i)));
      CHECK(is_invariant(D[i], gens));
    }
  }
}

TEST_CASE("z_n and y_nk examples") {
  const auto F2 = FieldSpec::of_order(2), F3 = FieldSpec::of_order(3);
  CHECK(z_n(F2, 2) == make_poly(RingSpec::truncated(F2, 2, 2), {{{3, 3}, 1}}));
  CHECK(z_n(F3, 2) == make_poly(RingSpec::truncated(F3, 2, 2), {{{8, 8}, 1}}));
  for (int n = 1; n <= 4; ++n) CHECK(z_n(F3, n).degree() == n * 8);

  CHECK(y_nk(F3, 2, 0) == make_poly(RingSpec::truncated(F3, 2, 2), {{{6, 0}, 1}, {{4, 2}, 1}, {{2, 4}, 1}, {{0, 6}, 1}}));
  CHECK(y_nk(F2, 3, 0) == make_poly(RingSpec::truncated(F2, 3, 2), {{{2, 2, 0}, 1},
                                                                    {{2, 0, 2}, 1},
                                                                    {{0, 2, 2}, 1},
                                                                    {{2, 1, 1}, 1},
                                                                    {{1, 2, 1}, 1},
                                                                    {{1, 1, 2}, 1}}));
  for (std::uint64_t q : {2, 3, 4})
    for (int n = 1; n <= 3; ++n) CHECK(y_nk(FieldSpec::of_order(q), n, static_cast<int>(q) + 1).is_zero());
}

TEST_CASE("a_mnk examples and bounds") {
  for (std::uint64_t q : {2, 3}) {
    const auto F = FieldSpec::of_order(q);
    for (int m = 2; m <= 3; ++m) {
      const std::uint64_t L = kprime_bound(q, m);
      for (std::uint64_t k = 0; k <= L; ++k) {
        // two variables: x1^{(L-i)(q-1)} x2^{(k+i)(q-1)} ... written out directly
        const auto R = RingSpec::truncated(F, 2, m);
        QPolynomial expected(R);
        for (std::uint64_t i = k; i <= L; ++i)
          expected.add_term(Monomial{static_cast<std::uint32_t>(i * (q - 1)), static_cast<std::uint32_t>((L + k - i) * (q - 1))}, F.one());
        CHECK(a_mnk(F, m, 2, k) == expected);
      }
      CHECK_THROWS(a_mnk(F, m, 2, L + 1));
    }
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= static_cast<int>(q); ++k) CHECK(a_mnk(F, 2, n, k) == y_nk(F, n, k));
  }
  const auto seven = a_mnk(FieldSpec::of_order(2), 3, 2, 0);
  CHECK(seven.size() == 7);
  CHECK(seven.degree() == 6);
}

TEST_CASE("a_mnk agrees with a scan of the monomial basis") {
  for (auto [q, m, n] : {std::tuple{2, 2, 2}, {2, 3, 2}, {2, 3, 3}, {3, 2, 3}, {3, 3, 2}, {4, 2, 2}, {2, 4, 2}}) {
    const auto F = FieldSpec::of_order(q);
    for (std::uint64_t k = 0; k <= kprime_bound(q, m); ++k) REQUIRE(a_mnk(F, m, n, k) == scanned_a(F, m, n, k));
  }
}

TEST_CASE("m=2 recurrence in n") {
  for (std::uint64_t q : {2, 3}) {
    const auto F = FieldSpec::of_order(q);
    for (int n = 2; n <= 3; ++n) {
      const auto R = RingSpec::truncated(F, n, 2);
      for (std::uint64_t k = 0; k <= q; ++k) {
        QPolynomial rhs(R);
        for (std::uint64_t i = k; i <= q; ++i)
          rhs += poly_mul(change_ring(y_nk(F, n - 1, static_cast<int>(q + k - i)), R), x_pow(R, n - 1, i * (q - 1)));
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(y_nk(F, n, static_cast<int>(k)) == rhs);
      }
    }
  }
}

TEST_CASE("general recurrence in n") {
  const auto F2 = FieldSpec::of_order(2);
  for (int n = 2; n <= 3; ++n)
    for (std::uint64_t k = 0; k <= kprime_bound(2, 3); ++k) CHECK(a_recurrence_check(F2, 3, n, k));
  for (std::uint64_t k = 0; k <= kprime_bound(3, 3); ++k) CHECK(a_recurrence_check(FieldSpec::of_order(3), 3, 2, k));
}

TEST_CASE("closed form of the two-variable m=2 family") {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int k = 0; k <= static_cast<int>(q); ++k) CHECK(y_closed_form_check(FieldSpec::of_order(q), k));
}

TEST_CASE("family members are invariant with the stated degrees") {
  for (auto [q, n, m] : {std::tuple{2, 2, 2}, {3, 2, 2}, {4, 2, 2}, {2, 3, 2}, {3, 3, 2}, {2, 4, 2}, {2, 2, 3}, {2, 2, 4}, {3, 2, 3}, {2, 3, 3}}) {
    const auto F = FieldSpec::of_order(q);
    const auto gens = gl_generators(F, n);
    const std::uint64_t L = kprime_bound(q, m), base = (n - 1) * (ipow(q, m) - q);
    std::vector<std::uint64_t> degrees;
    for (std::uint64_t k = 0; k <= L; ++k) {
      const auto a = a_mnk(F, m, n, k);
      REQUIRE(is_invariant(a, gens));
      REQUIRE(a.degree() == static_cast<long long>(base + k * (q - 1)));
      degrees.push_back(static_cast<std::uint64_t>(a.degree()));
    }
    const auto weights = qbinom(m, 1, q).shifted(base);
    CHECK(degrees == weights.support());
    for (std::uint64_t d : weights.support()) CHECK(weights.coefficient(d) == 1);
    if (m == 2) CHECK(is_invariant(z_n(F, n), gens));
  }
}

TEST_CASE("binomial generating-function identity") {
  for (std::uint64_t q : {2, 3, 4}) {
    const auto F = FieldSpec::of_order(q);
    const std::uint32_t p = F.p();
    for (int m = 2; m <= 3; ++m) {
      const std::uint64_t L = kprime_bound(q, m);
      std::vector<std::uint32_t> lhs(ipow(q, m) - q + 1, 0);
      for (std::uint64_t j = 0; j <= L; ++j) {
        std::vector<std::uint32_t> power{1};
        for (std::uint64_t e = 0; e < j * (q - 1); ++e) power = oracle::mod_p_mul(power, {1, 1}, p);
        for (std::size_t i = 0; i < power.size(); ++i) lhs[i] = (lhs[i] + power[i]) % p;
      }
      std::vector<std::uint32_t> rhs(lhs.size(), 0);
      for (std::uint64_t j = 0; j <= L; ++j) rhs[j * (q - 1)] = 1;
      CAPTURE(q);
      CAPTURE(m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("S polynomials") {
  const auto F2 = FieldSpec::of_order(2);
  const auto [s0, s1] = s_images(F2, 3);
  const auto R = RingSpec::truncated(F2, 2, 3);
  CHECK(s0 == make_poly(R, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK(s1 == make_poly(R, {{{2, 1}, 1}, {{1, 2}, 1}}));
  const auto F3 = FieldSpec::of_order(3);
  CHECK(s_images(F3, 2).s0 == make_poly(RingSpec::truncated(F3, 2, 2), {{{6, 0}, 1}, {{4, 2}, 1}, {{2, 4}, 1}, {{0, 6}, 1}}));

  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto F = FieldSpec::of_order(q);
    const auto S = RingSpec::polynomial(F, 2);
    const auto polys = s_polynomials(F);
    CHECK(poly_mul(x_pow(S, 0, q - 1) - x_pow(S, 1, q - 1), polys.s0) == x_pow(S, 0, q * q - 1) - x_pow(S, 1, q * q - 1));
    const auto D = dickson(F, 2);
    CHECK(scalar_ratio(polys.s0, D[1]).has_value());
    CHECK(scalar_ratio(polys.s1, D[0]).has_value());
    CHECK(polys.s0.degree() == static_cast<long long>(q * q - q));
    CHECK(polys.s1.degree() == static_cast<long long>(q * q - 1));
  }
  CHECK_THROWS(s_images(F2, 1));
}

TEST_CASE("s_power examples") {
  for (std::uint64_t q : {2, 3}) {
    const auto F = FieldSpec::of_order(q);
    CHECK(s_power(F, 0, 0) == QPolynomial::constant(RingSpec::truncated(F, 2, 3), F.one()));
    const auto top = s_power(F, static_cast<int>(q), static_cast<int>(q) - 1);
    CHECK_FALSE(top.is_zero());
    CHECK(is_invariant(top, gl_generators(F, 2)));
  }
  CHECK_THROWS(s_power(FieldSpec::of_order(2), 3, 0));
}

TEST_CASE("parabolic family examples") {
  const auto F3 = FieldSpec::of_order(3);
  const auto alpha = Composition::parse("2,1,3");
  const auto R = RingSpec::truncated(F3, 6, 2);
  const auto a = parabolic_family(F3, alpha, ParA{});
  CHECK(a == make_poly(R, {{{8, 8, 8, 8, 8, 8}, 1}}));
  CHECK(parabolic_family_degree(3, alpha, ParA{}) == 48);
  CHECK(parabolic_family(F3, alpha, ParD{1}) == QPolynomial::constant(R, F3.one()));

  const auto b31 = make_poly(R, {{{8, 8, 8, 6, 6, 2}, 1},
                                 {{8, 8, 8, 6, 4, 4}, 1},
                                 {{8, 8, 8, 4, 6, 4}, 1},
                                 {{8, 8, 8, 6, 2, 6}, 1},
                                 {{8, 8, 8, 4, 4, 6}, 1},
                                 {{8, 8, 8, 2, 6, 6}, 1}});
  CHECK(parabolic_family(F3, alpha, ParB{3, 1}) == b31);
  CHECK(b31.coefficient(Monomial{8, 8, 8, 2, 6, 6}) == F3.one());

  // b_{1,k} is y_{n,k}
  for (int k = 0; k <= 3; ++k) CHECK(parabolic_family(F3, alpha, ParB{1, k}) == y_nk(F3, 6, k));

  CHECK_THROWS(parabolic_family(F3, alpha, ParC{3, 2, 0}));
  CHECK_THROWS(parabolic_family(F3, alpha, ParD{4}));
  CHECK_THROWS(parabolic_family(F3, alpha, ParD{2}));
  CHECK_THROWS(parabolic_family(F3, alpha, ParB{1, 4}));
  CHECK(to_string(ParabolicMember{ParC{1, 3, 2}}) == "c:1,3,2");
  CHECK(std::get<ParB>(parse_parabolic_member("b:3,1")).k == 1);
}

TEST_CASE("parabolic family members are invariant with the stated degree") {
  for (std::uint64_t q : {2, 3}) {
    const auto F = FieldSpec::of_order(q);
    for (const char* text : {"2,1,3", "1,1", "1,2", "2,1", "1,1,1"}) {
      const auto alpha = Composition::parse(text);
      const auto gens = parabolic_generators(F, alpha);
      std::vector<ParabolicMember> members{ParA{}};
      const int l = alpha.length();
      for (int r = 1; r <= l; ++r) {
        if (alpha.part(r) >= 2) members.push_back(ParD{r});
        for (int k = 0; k <= static_cast<int>(q); ++k) {
          members.push_back(ParB{r, k});
          for (int s = r + 1; s <= l; ++s) members.push_back(ParC{r, s, k});
        }
      }
      for (const auto& w : members) {
        CAPTURE(q);
        CAPTURE(text);
        CAPTURE(to_string(w));
        const auto f = parabolic_family(F, alpha, w);
        REQUIRE(is_invariant(f, gens));
        if (!f.is_zero()) REQUIRE(f.degree() == static_cast<long long>(parabolic_family_degree(q, alpha, w)));
      }
    }
  }
}

TEST_CASE("q2_dickson_step") {
  const auto F2 = FieldSpec::of_order(2);
  for (int m = 3; m <= 4; ++m) {
    const std::uint64_t L = kprime_bound(2, m);
    for (std::uint64_t k = 0; k + 2 <= L; ++k) CHECK(q2_dickson_step(F2, m, a_mnk(F2, m, 2, k)) == a_mnk(F2, m, 2, k + 2));
  }
  CHECK(q2_dickson_step(F2, 3, a_mnk(F2, 3, 2, 0)) == a_mnk(F2, 3, 2, 2));
  const auto R3 = RingSpec::truncated(F2, 2, 3);
  CHECK(q2_dickson_step(F2, 3, QPolynomial(R3)).is_zero());
  const auto R4 = RingSpec::truncated(F2, 2, 4);
  const auto d20 = make_poly(R4, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(poly_mul(d20, a_mnk(F2, 4, 2, 11)) == a_mnk(F2, 4, 2, 13));
  CHECK(q2_dickson_step(F2, 4, a_mnk(F2, 4, 2, 11)) == a_mnk(F2, 4, 2, 13));
  CHECK_THROWS(q2_dickson_step(FieldSpec::of_order(3), 3, QPolynomial(RingSpec::truncated(FieldSpec::of_order(3), 2, 3))));
}

TEST_CASE("rep_decompose") {
  CHECK(rep_decompose(2, 0) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
  CHECK(rep_decompose(3, 14) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(rep_decompose(2, 4) == std::pair<std::uint64_t, std::uint64_t>{0, 2});
  CHECK_THROWS(rep_decompose(2, 5));
  CHECK_FALSE(rep_decompose(2, 1).has_value());
  CHECK_THROWS(rep_decompose(2, 5000));
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::uint64_t a = 0; a <= q * q * q - q * q; ++a) {
      const auto rep = rep_decompose(q, a);
      if (rep) REQUIRE(rep->first * (q * q - 1) + rep->second * (q * q - q) == a);
    }
}

TEST_CASE("family tags round-trip") {
  for (const char* name : {"dickson", "zn", "ynk", "ykprime", "amnk", "s0", "s1", "spower", "para", "parb", "parc", "pard", "q2step"}) {
    const auto tag = parse_family_tag(name);
    REQUIRE(tag.has_value());
    CHECK(to_string(*tag) == name);
  }
  CHECK_FALSE(parse_family_tag("nope").has_value());
}
