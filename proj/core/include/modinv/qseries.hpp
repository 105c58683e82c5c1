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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modinv/action.hpp"

namespace modinv {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a quotient of t-polynomials leaves a remainder.
class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
};

/// Univariate polynomial in t with integer coefficients.
class TPoly {
 public:
  using CoeffMap = std::map<std::uint64_t, BigInt>;

  TPoly() = default;
  /// Dense coefficients, degree 0 upward.
  TPoly(std::initializer_list<long long> dense);
  static TPoly monomial(std::uint64_t degree, BigInt c = 1);
  static TPoly constant(BigInt c) { return monomial(0, std::move(c)); }
  /// 1 - t^k.
  static TPoly one_minus_t_pow(std::uint64_t k);
  /// 1 + t^s + t^{2s} + ... + t^{(count-1)s}.
  static TPoly geometric(std::uint64_t step, std::uint64_t count);

  const CoeffMap& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long long degree() const { return c_.empty() ? -1 : static_cast<long long>(c_.rbegin()->first); }
  BigInt coefficient(std::uint64_t d) const;
  std::vector<BigInt> dense() const;
  std::vector<std::uint64_t> support() const;
  bool has_nonnegative_coefficients() const;

  TPoly& operator+=(const TPoly& rhs);
  TPoly& operator-=(const TPoly& rhs);
  TPoly shifted(std::uint64_t k) const;  // t^k * this

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  /// "1 + t^2 + 3*t^4".
  std::string to_string() const;

 private:
  void add_coeff(std::uint64_t d, const BigInt& c);
  CoeffMap c_;
};

TPoly tpoly_pow(const TPoly& f, std::uint64_t k);

/// Exact quotient; throws InexactDivision on a nonzero remainder and
/// std::domain_error when den is zero.
TPoly tpoly_exact_div(const TPoly& num, const TPoly& den);

/// Gaussian binomial prod_{i<k} (1 - t^{q^m - q^i}) / (1 - t^{q^k - q^i}).
TPoly qbinom(int m, int k, std::uint64_t q);

/// sum_{k=0}^{min(n,m)} t^{(n-k)(q^m - q^k)} qbinom(m, k, q).
TPoly conjectured_series(std::uint64_t q, int n, int m);

/// Nonnegative block sizes (zeros allowed) with partial sums B_i.
class BetaVector {
 public:
  explicit BetaVector(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return partial_sum(length()); }  // |beta|
  int partial_sum(int i) const;                      // B_i, B_0 = 0
  std::string to_string() const;
  friend bool operator==(const BetaVector&, const BetaVector&) = default;

 private:
  std::vector<int> parts_;
};

/// Where the numerator product of the Gaussian multinomial starts.
/// FromZero reproduces the single-block Gaussian binomial; FromOne is the
/// variant starting at j = 1 and usually fails to divide exactly.
enum class NumeratorIndex { FromZero = 0, FromOne = 1 };

/// [m over (beta_1, ..., beta_l, m - |beta|)]_{q,t}.
TPoly gaussian_multinomial(int m, const BetaVector& beta, std::uint64_t q,
                           NumeratorIndex start = NumeratorIndex::FromZero);

/// e(m, alpha, beta) = sum_i (alpha_i - beta_i)(q^m - q^{B_i}).
std::uint64_t parabolic_exponent(int m, const Composition& alpha, const BetaVector& beta, std::uint64_t q);

struct ParabolicTerm {
  BetaVector beta;
  std::uint64_t exponent;
  TPoly term;  // t^exponent * multinomial
};

/// beta <= alpha with |beta| <= m, lexicographic over the box prod [0, alpha_i].
std::vector<BetaVector> enumerate_betas(const Composition& alpha, int m);

std::vector<ParabolicTerm> parabolic_terms(std::uint64_t q, const Composition& alpha, int m,
                                           NumeratorIndex start = NumeratorIndex::FromZero);

TPoly parabolic_conjectured_series(std::uint64_t q, const Composition& alpha, int m,
                                   NumeratorIndex start = NumeratorIndex::FromZero);

struct FSupportReport {
  std::uint64_t q = 0;
  TPoly f;
  std::vector<std::uint64_t> support;
  bool zero_one_coefficients = false;
  bool representability_matches = false;
  bool palindromic = false;
  bool passed() const { return zero_one_coefficients && representability_matches && palindromic; }
};

/// Checks f(t) = qbinom(3, 2, q): 0/1 coefficients, support on [0, q^3 - q^2]
/// equal to the nonnegative combinations of q^2 - 1 and q^2 - q, and the
/// symmetry coeff(a) = coeff(2(q^3 - q^2) - a).
FSupportReport f_support_analysis(std::uint64_t q);

/// Coefficient of t^{q^2+q} in ((1 - t^{q+1}) / (1 - t))^{2q-1}.
BigInt s_power_witness_coefficient(std::uint64_t q);

std::uint64_t ipow(std::uint64_t base, int exp);

}  // namespace modinv
