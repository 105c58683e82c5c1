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

#include "modinv/qseries.hpp"
#include "oracles.hpp"

using namespace modinv;
using oracle::series_quotient;

TEST_CASE("TPoly arithmetic") {
  const TPoly a{1, 2, 0, 3};
  CHECK(a.degree() == 3);
  CHECK(a.support() == std::vector<std::uint64_t>{0, 1, 3});
  CHECK((a - a).is_zero());
  CHECK(a * TPoly{1, 1} == TPoly{1, 3, 2, 3, 3});
  CHECK(a.shifted(2) == TPoly{0, 0, 1, 2, 0, 3});
  CHECK(tpoly_pow(TPoly{1, 1}, 3) == TPoly{1, 3, 3, 1});
  CHECK(TPoly::one_minus_t_pow(2) == TPoly{1, 0, -1});
  CHECK(TPoly::geometric(2, 3) == TPoly{1, 0, 1, 0, 1});
  CHECK((TPoly{-1, 2}).has_nonnegative_coefficients() == false);
}

TEST_CASE("tpoly_exact_div examples") {
  CHECK(tpoly_exact_div(TPoly::one_minus_t_pow(3), TPoly::one_minus_t_pow(1)) == TPoly{1, 1, 1});
  CHECK(tpoly_exact_div(TPoly::one_minus_t_pow(4), TPoly::one_minus_t_pow(2)) == TPoly{1, 0, 1});
  CHECK_THROWS_AS(tpoly_exact_div(TPoly::one_minus_t_pow(3), TPoly::one_minus_t_pow(2)), InexactDivision);
  CHECK_THROWS_WITH(tpoly_exact_div(TPoly::one_minus_t_pow(3), TPoly::one_minus_t_pow(2)), doctest::Contains("inexact division"));
  CHECK_THROWS(tpoly_exact_div(TPoly{1}, TPoly{}));
}

TEST_CASE("qbinom examples") {
  for (int m = 0; m <= 4; ++m) CHECK(qbinom(m, 0, 3) == TPoly{1});
  CHECK(qbinom(2, 1, 2) == TPoly{1, 1, 1});
  CHECK(qbinom(3, 2, 2) == series_quotient({7, 6}, {3, 2}, 40));
  CHECK(qbinom(3, 2, 2).support() == std::vector<std::uint64_t>{0, 2, 3, 4, 5, 6, 8});
  CHECK_THROWS(qbinom(2, 3, 2));
}

TEST_CASE("qbinom matches the truncated power series of its product") {
  for (std::uint64_t q : {2, 3, 4})
    for (int m = 1; m <= 3; ++m)
      for (int k = 0; k <= m; ++k) {
        std::vector<std::uint64_t> num, den;
        for (int i = 0; i < k; ++i) {
          num.push_back(ipow(q, m) - ipow(q, i));
          den.push_back(ipow(q, k) - ipow(q, i));
        }
        const auto b = qbinom(m, k, q);
        CHECK(b == series_quotient(num, den, static_cast<std::uint64_t>(b.degree()) + 20));
      }
}

TEST_CASE("qbinom nonnegativity") {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int m = 0; m <= 4; ++m)
      for (int k = 0; k <= m; ++k) CHECK(qbinom(m, k, q).has_nonnegative_coefficients());
}

// The t-exponents q^m - q^i are not those of the classical Gaussian
// coefficient, so k <-> m - k symmetry only survives at the ends.
TEST_CASE("qbinom k <-> m - k symmetry") {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int m = 0; m <= 4; ++m) {
      CHECK(qbinom(m, 0, q) == qbinom(m, m, q));
      for (int k = 1; k < m; ++k) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(k);
        const auto a = qbinom(m, k, q), b = qbinom(m, m - k, q);
        CHECK((a == b) == (2 * k == m));
        // degree of prod (1 - t^{q^m - q^i}) / (1 - t^{q^k - q^i}) over i < k
        long long expected = 0;
        for (int i = 0; i < k; ++i) expected += static_cast<long long>(ipow(q, m) - ipow(q, k));
        CHECK(a.degree() == expected);
      }
    }
  CHECK(qbinom(3, 1, 2).degree() == 6);
  CHECK(qbinom(3, 2, 2).degree() == 8);
}

TEST_CASE("conjectured_series examples") {
  CHECK(conjectured_series(2, 2, 2) == TPoly{1, 0, 1, 1, 1, 0, 1});
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int n = 1; n <= 4; ++n)
      CHECK(conjectured_series(q, n, 1) == TPoly::constant(1) + TPoly::monomial(static_cast<std::uint64_t>(n) * (q - 1)));
  const TPoly expected = TPoly::monomial(14) + series_quotient({7}, {1}, 20).shifted(6) + series_quotient({7, 6}, {3, 2}, 20);
  CHECK(conjectured_series(2, 2, 3) == expected);
}

TEST_CASE("conjectured_series top degree") {
  for (std::uint64_t q : {2, 3, 4})
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= 3; ++m) {
        const auto s = conjectured_series(q, n, m);
        CHECK(s.degree() == static_cast<long long>(n * (ipow(q, m) - 1)));
        CHECK(s.coefficient(static_cast<std::uint64_t>(s.degree())) == 1);
        CHECK(s.has_nonnegative_coefficients());
      }
}

TEST_CASE("closing identity for the k=1 term") {
  for (std::uint64_t q : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        const std::uint64_t base = (n - 1) * (ipow(q, m) - q), L = (ipow(q, m) - q) / (q - 1);
        TPoly rhs;
        for (std::uint64_t k = 0; k <= L; ++k) rhs += TPoly::monomial(base + k * (q - 1));
        CHECK(qbinom(m, 1, q).shifted(base) == rhs);
      }
}

TEST_CASE("gaussian_multinomial examples") {
  for (std::uint64_t q : {2, 3, 4}) {
    CHECK(gaussian_multinomial(2, BetaVector({0, 0, 0}), q) == TPoly{1});
    for (int r = 0; r < 3; ++r) {
      std::vector<int> parts(3, 0);
      parts[r] = 1;
      CHECK(gaussian_multinomial(2, BetaVector(parts), q) == tpoly_exact_div(TPoly::one_minus_t_pow(q * q - 1), TPoly::one_minus_t_pow(q - 1)));
    }
    for (int m = 0; m <= 3; ++m)
      for (int k = 0; k <= m; ++k) {
        CHECK(gaussian_multinomial(m, BetaVector({k}), q) == qbinom(m, k, q));
        CHECK(gaussian_multinomial(m, BetaVector({k}), q).has_nonnegative_coefficients());
      }
  }
  CHECK_THROWS(gaussian_multinomial(2, BetaVector({2, 1}), 2));
  CHECK_THROWS_AS(gaussian_multinomial(2, BetaVector({1}), 3, NumeratorIndex::FromOne), InexactDivision);
}

TEST_CASE("beta enumeration and exponents") {
  const auto alpha = Composition::parse("2,1,3");
  const auto betas = enumerate_betas(alpha, 2);
  std::vector<std::vector<int>> parts;
  for (const auto& b : betas) parts.push_back(b.parts());
  const std::vector<std::vector<int>> expected{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1},
                                              {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  CHECK(parts == expected);
  CHECK(parabolic_exponent(2, alpha, BetaVector({0, 0, 0}), 3) == 48);
  CHECK(parabolic_exponent(2, alpha, BetaVector({1, 0, 1}), 3) == 12);
  CHECK(BetaVector({1, 0, 2}).partial_sum(2) == 1);
  CHECK(BetaVector({1, 0, 2}).size() == 3);
}

TEST_CASE("parabolic_conjectured_series examples") {
  const auto alpha = Composition::parse("2,1,3");
  const auto terms = parabolic_terms(3, alpha, 2);
  REQUIRE(terms.size() == 9);
  CHECK(terms.front().term == TPoly::monomial(48));
  for (const auto& t : terms)
    if (t.beta.parts() == std::vector<int>{1, 1, 0}) CHECK(t.term == TPoly{1, 0, 1, 0, 1, 0, 1}.shifted(6));
  TPoly sum;
  for (const auto& t : terms) sum += t.term;
  CHECK(sum == parabolic_conjectured_series(3, alpha, 2));
}

TEST_CASE("the single-block parabolic series is the general one") {
  for (std::uint64_t q : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m)
        CHECK(parabolic_conjectured_series(q, Composition({n}), m) == conjectured_series(q, n, m));
}

TEST_CASE("parabolic series coefficients are nonnegative") {
  for (std::uint64_t q : {2, 3})
    for (const char* a : {"1,1", "2,1", "1,2", "1,1,1", "2,1,3"}) CHECK(parabolic_conjectured_series(q, Composition::parse(a), 2).has_nonnegative_coefficients());
}

TEST_CASE("f_support_analysis") {
  const auto r2 = f_support_analysis(2);
  CHECK(r2.support == std::vector<std::uint64_t>{0, 2, 3, 4, 5, 6, 8});
  CHECK(r2.passed());
  const auto r3 = f_support_analysis(3);
  CHECK(r3.f.degree() == 36);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto r = f_support_analysis(q);
    CHECK(r.passed());
    CHECK(r.f.coefficient(0) == 1);
    CHECK(r.f.coefficient(1) == 0);
  }
}

TEST_CASE("witness coefficient is -1 mod p") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const std::uint64_t p = prime_power(q)->first;
    const std::vector<std::uint64_t> num(2 * q - 1, q + 1), den(2 * q - 1, 1);
    const BigInt oracle_value = series_quotient(num, den, q * q + q).coefficient(q * q + q);
    CHECK(s_power_witness_coefficient(q) == oracle_value);
    BigInt residue = oracle_value % p;
    if (residue < 0) residue += p;
    CHECK(residue == p - 1);
  }
}
