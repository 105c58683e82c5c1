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
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modinv {

/// Element of GF(p^e).
///
/// The coefficient vector (c_0, ..., c_{e-1}) of the residue class is packed
/// into a single base-p integer `code = c_0 + c_1 p + ... + c_{e-1} p^{e-1}`.
/// Codes are canonical by construction, so equality of codes is equality of
/// field elements. Use FieldSpec::coefficients() to unpack.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  static constexpr FieldElement from_code(std::uint32_t code) {
    FieldElement a;
    a.code_ = code;
    return a;
  }

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

/// A finite field GF(p^e) presented as GF(p)[x] / (modulus).
///
/// Copies are cheap: the arithmetic tables are shared and immutable.
class FieldSpec {
 public:
  /// Largest supported field order.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// GF(p^e) with the lexicographically smallest monic irreducible modulus
  /// (coefficients compared low-degree first). Throws std::invalid_argument
  /// with "not prime" or "bad extension degree".
  static FieldSpec make(std::uint64_t p, int e);

  /// GF(p^e) with an explicit modulus, given low-degree first with a leading
  /// 1. Throws if the modulus is not monic of degree e or is reducible.
  static FieldSpec with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus);

  /// Field of order q; q must be a prime power.
  static FieldSpec of_order(std::uint64_t q);

  std::uint32_t p() const;
  int e() const;
  std::uint32_t q() const;
  std::span<const std::uint32_t> modulus() const;
  bool is_prime_field() const { return e() == 1; }

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const { return FieldElement::from_code(1); }
  /// Image of an integer under Z -> GF(p) -> GF(q).
  FieldElement from_int(long long v) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  /// Element with the given code; throws if code >= q.
  FieldElement element(std::uint32_t code) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  /// Schoolbook polynomial product reduced by the modulus. Slow; the table
  /// driven mul() must agree with it.
  FieldElement mul_by_reduction(FieldElement a, FieldElement b) const;

  /// A fixed generator of the multiplicative group.
  FieldElement primitive_element() const;

  /// Integer rendering used by the text and JSON formats: the plain residue
  /// for prime fields, "[c0,c1,...]" otherwise.
  std::string format(FieldElement a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Tables;
  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

FieldElement field_mul(FieldElement a, FieldElement b, const FieldSpec& F);
FieldElement field_inv(FieldElement a, const FieldSpec& F);
FieldSpec make_field(std::uint64_t p, int e);

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// C(N, M) mod p by Lucas' theorem (0 when M > N).
std::uint32_t lucas_binomial(std::uint64_t N, std::uint64_t M, std::uint32_t p);

}  // namespace modinv
