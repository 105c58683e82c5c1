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

#include "modinv/gf.hpp"

#include <algorithm>
#include <sstream>

namespace modinv {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct FieldSpec::Tables {
  std::uint32_t p = 0;
  int e = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> pow_p;  // p^i, i < e
  std::vector<std::uint32_t> exp;    // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;    // log[a] for a != 0
  std::vector<std::uint32_t> neg;
  std::vector<std::uint16_t> add;  // q*q table, only for small extension fields
  std::uint32_t primitive = 1;

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (int i = 0; i < e; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      r += ((da + db) % p) * pow_p[i];
    }
    return r;
  }

  std::uint32_t neg_digits(std::uint32_t a) const {
    std::uint32_t r = 0;
    for (int i = 0; i < e; ++i) {
      const std::uint32_t da = a % p;
      a /= p;
      r += ((p - da) % p) * pow_p[i];
    }
    return r;
  }

  std::uint32_t mul_reduce(std::uint32_t a, std::uint32_t b) const {
    Poly pa(e), pb(e);
    for (int i = 0; i < e; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    Poly prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    const Poly r = poly_rem(prod, modulus, p);
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * pow_p[i];
    return code;
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::pair{q, 1};
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, e};
}

FieldSpec FieldSpec::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("not prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  const int e = static_cast<int>(modulus.size()) - 1;
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!is_irreducible(modulus, static_cast<std::uint32_t>(p))) throw std::invalid_argument("reducible modulus");

  auto t = std::make_shared<Tables>();
  t->p = static_cast<std::uint32_t>(p);
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = std::move(modulus);
  t->pow_p.resize(e);
  for (int i = 0, v = 1; i < e; ++i, v *= static_cast<int>(p)) t->pow_p[i] = static_cast<std::uint32_t>(v);

  t->neg.resize(t->q);
  for (std::uint32_t a = 0; a < t->q; ++a) t->neg[a] = t->neg_digits(a);
  if (e > 1 && t->q <= 256) {
    t->add.resize(std::size_t{t->q} * t->q);
    for (std::uint32_t a = 0; a < t->q; ++a)
      for (std::uint32_t b = 0; b < t->q; ++b) t->add[std::size_t{a} * t->q + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
  }

  // Smallest code of multiplicative order q - 1.
  const std::uint32_t order = t->q - 1;
  t->exp.assign(2 * std::size_t{order}, 0);
  t->log.assign(t->q, 0);
  for (std::uint32_t g = 1; g < t->q; ++g) {
    std::uint32_t x = 1, k = 0;
    do {
      t->exp[k] = x;
      x = t->mul_reduce(x, g);
      ++k;
    } while (x != 1 && k < order);
    if (x == 1 && k == order) {
      t->primitive = g;
      break;
    }
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    t->exp[k + order] = t->exp[k];
    t->log[t->exp[k]] = k;
  }
  return FieldSpec(std::move(t));
}

FieldSpec FieldSpec::make(std::uint64_t p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("not prime");
  if (e <= 0) throw std::invalid_argument("bad extension degree");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  if (e == 1) return with_modulus(p, {0, 1});
  // Enumerate in lexicographic order with c_0 the most significant digit.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly f(e + 1);
    std::uint64_t v = idx;
    for (int i = e - 1; i >= 0; --i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, static_cast<std::uint32_t>(p))) return with_modulus(p, std::move(f));
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldSpec FieldSpec::of_order(std::uint64_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return make(pe->first, pe->second);
}

std::uint32_t FieldSpec::p() const { return t_->p; }
int FieldSpec::e() const { return t_->e; }
std::uint32_t FieldSpec::q() const { return t_->q; }
std::span<const std::uint32_t> FieldSpec::modulus() const { return t_->modulus; }

FieldElement FieldSpec::from_int(long long v) const {
  const long long p = t_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElement::from_code(static_cast<std::uint32_t>(r));
}

FieldElement FieldSpec::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(t_->e)) throw std::invalid_argument("too many coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= t_->p) throw std::invalid_argument("coefficient out of range");
    code += coeffs[i] * t_->pow_p[i];
  }
  return FieldElement::from_code(code);
}

std::vector<std::uint32_t> FieldSpec::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> c(t_->e);
  std::uint32_t v = a.code();
  for (int i = 0; i < t_->e; ++i) {
    c[i] = v % t_->p;
    v /= t_->p;
  }
  return c;
}

FieldElement FieldSpec::element(std::uint32_t code) const {
  if (code >= t_->q) throw std::out_of_range("field element code out of range");
  return FieldElement::from_code(code);
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  const Tables& t = *t_;
  if (t.e == 1) {
    std::uint32_t s = a.code() + b.code();
    return FieldElement::from_code(s >= t.p ? s - t.p : s);
  }
  if (t.p == 2) return FieldElement::from_code(a.code() ^ b.code());
  if (!t.add.empty()) return FieldElement::from_code(t.add[std::size_t{a.code()} * t.q + b.code()]);
  return FieldElement::from_code(t.add_digits(a.code(), b.code()));
}

FieldElement FieldSpec::neg(FieldElement a) const { return FieldElement::from_code(t_->neg[a.code()]); }

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  const Tables& t = *t_;
  if (a.is_zero() || b.is_zero()) return zero();
  if (t.e == 1) return FieldElement::from_code(static_cast<std::uint32_t>(std::uint64_t{a.code()} * b.code() % t.p));
  return FieldElement::from_code(t.exp[t.log[a.code()] + t.log[b.code()]]);
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("division by zero");
  const Tables& t = *t_;
  const std::uint32_t order = t.q - 1;
  return FieldElement::from_code(t.exp[(order - t.log[a.code()]) % order]);
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t k) const {
  FieldElement r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

FieldElement FieldSpec::mul_by_reduction(FieldElement a, FieldElement b) const {
  return FieldElement::from_code(t_->mul_reduce(a.code(), b.code()));
}

FieldElement FieldSpec::primitive_element() const { return FieldElement::from_code(t_->primitive); }

std::string FieldSpec::format(FieldElement a) const {
  if (t_->e == 1) return std::to_string(a.code());
  std::ostringstream os;
  os << '[';
  const auto c = coefficients(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
}

FieldElement field_mul(FieldElement a, FieldElement b, const FieldSpec& F) { return F.mul(a, b); }
FieldElement field_inv(FieldElement a, const FieldSpec& F) { return F.inv(a); }
FieldSpec make_field(std::uint64_t p, int e) { return FieldSpec::make(p, e); }

std::uint32_t lucas_binomial(std::uint64_t N, std::uint64_t M, std::uint32_t p) {
  std::uint64_t result = 1;
  while (M > 0) {
    const std::uint64_t n = N % p, m = M % p;
    if (m > n) return 0;
    // C(n, m) mod p for digits n, m < p via the multiplicative formula.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      num = num * ((n - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is a product of nonzero residues, invert by Fermat
    std::uint64_t inv = 1, base = den, k = p - 2;
    while (k > 0) {
      if (k & 1) inv = inv * base % p;
      base = base * base % p;
      k >>= 1;
    }
    result = result * (num * inv % p) % p;
    N /= p;
    M /= p;
  }
  return static_cast<std::uint32_t>(result % p);
}

}  // namespace modinv
