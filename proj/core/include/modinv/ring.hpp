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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modinv/gf.hpp"
#include "modinv/linalg.hpp"

namespace modinv {

/// F_q[x_1..x_n], optionally modulo the Frobenius power (x_1^E, ..., x_n^E)
/// with E = q^m.
struct RingSpec {
  FieldSpec field;
  int n = 0;
  std::optional<int> m;

  /// The polynomial ring S (no truncation).
  static RingSpec polynomial(FieldSpec field, int n);
  /// The truncated ring Q = S / (x_i^{q^m}).
  static RingSpec truncated(FieldSpec field, int n, int m);

  bool capped() const { return m.has_value(); }
  /// q^m; throws std::logic_error for an uncapped ring.
  std::uint64_t cap() const;
  /// n (q^m - 1), the top degree of a capped ring.
  std::uint64_t top_degree() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.n == b.n && a.m == b.m && a.field == b.field;
  }
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
  Monomial(std::initializer_list<std::uint32_t> exponents) : e_(exponents) {}
  static Monomial unit(int n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::uint32_t> exponents() const { return e_; }

  std::uint64_t degree() const;
  Monomial operator*(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order with x_1 > x_2 > ... > x_n.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Comparator placing the grlex-largest monomial first.
struct LeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Sparse polynomial over F_q in canonical form: no zero coefficients and,
/// in a capped ring, no monomial with an exponent >= q^m.
class QPolynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, LeadingFirst>;

  explicit QPolynomial(RingSpec ring);

  static QPolynomial constant(RingSpec ring, FieldElement c);
  static QPolynomial monomial(RingSpec ring, Monomial mono, FieldElement c);
  static QPolynomial monomial(RingSpec ring, Monomial mono);
  /// x_{i+1} (zero-based index).
  static QPolynomial variable(RingSpec ring, int i);

  const RingSpec& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_.field; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  FieldElement coefficient(const Monomial& mono) const;
  /// Largest total degree of a term, -1 for the zero polynomial.
  long long degree() const;
  bool is_homogeneous() const;

  /// Accumulates c * mono, dropping it if it falls in the truncation ideal.
  void add_term(const Monomial& mono, FieldElement c);

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial operator-() const;
  QPolynomial scaled(FieldElement c) const;

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Text form: terms leading-first joined by " + ", e.g. "x1^2*x2 + 2*x2^3".
  /// Coefficients 1 are omitted on non-constant terms; extension field
  /// coefficients print as "[c0,c1,...]". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  bool admissible(const Monomial& mono) const;

  RingSpec ring_;
  TermMap terms_;
};

/// Monomials of total degree d with every exponent < q^m, leading-first.
/// Throws std::invalid_argument("infinite basis") on an uncapped ring.
std::vector<Monomial> monomial_basis(const RingSpec& ring, std::uint64_t d);

QPolynomial poly_mul(const QPolynomial& f, const QPolynomial& g);
QPolynomial poly_pow(const QPolynomial& f, std::uint64_t k);

/// f(Mx): x_j is replaced by sum_i M(i, j) x_i, so column j of M is the
/// image of x_j. Truncates eagerly in capped rings.
QPolynomial substitute_linear(const QPolynomial& f, const GFMatrix& M);

/// Homogeneous part of degree d.
QPolynomial graded_component(const QPolynomial& f, std::uint64_t d);

/// Image of f in S / (x_i^{q^m}). f must live in an uncapped ring.
QPolynomial project_to_Q(const QPolynomial& f, int m);

/// Re-embeds f into a ring over the same field with at least as many
/// variables (new variables are appended), truncating when the target is capped.
QPolynomial change_ring(const QPolynomial& f, const RingSpec& target);

/// c with f = c * g, when g != 0 and one exists.
std::optional<FieldElement> scalar_ratio(const QPolynomial& f, const QPolynomial& g);

}  // namespace modinv
