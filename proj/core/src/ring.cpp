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

#include "modinv/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modinv {

RingSpec RingSpec::polynomial(FieldSpec field, int n) {
  if (n < 1) throw std::invalid_argument("ring needs at least one variable");
  return RingSpec{std::move(field), n, std::nullopt};
}

RingSpec RingSpec::truncated(FieldSpec field, int n, int m) {
  if (n < 1) throw std::invalid_argument("ring needs at least one variable");
  if (m < 1) throw std::invalid_argument("truncation exponent m must be >= 1");
  std::uint64_t cap = 1;
  for (int i = 0; i < m; ++i) {
    cap *= field.q();
    if (cap > (1ull << 31)) throw std::invalid_argument("q^m too large");
  }
  return RingSpec{std::move(field), n, m};
}

std::uint64_t RingSpec::cap() const {
  if (!m) throw std::logic_error("uncapped ring has no exponent bound");
  std::uint64_t c = 1;
  for (int i = 0; i < *m; ++i) c *= field.q();
  return c;
}

std::uint64_t RingSpec::top_degree() const { return static_cast<std::uint64_t>(n) * (cap() - 1); }

std::uint64_t Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0}); }

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
  return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a < b;
}

QPolynomial::QPolynomial(RingSpec ring) : ring_(std::move(ring)) {}

QPolynomial QPolynomial::constant(RingSpec ring, FieldElement c) {
  QPolynomial f(ring);
  f.add_term(Monomial::unit(ring.n), c);
  return f;
}

QPolynomial QPolynomial::monomial(RingSpec ring, Monomial mono, FieldElement c) {
  if (static_cast<int>(mono.size()) != ring.n) throw std::invalid_argument("monomial arity mismatch");
  QPolynomial f(std::move(ring));
  f.add_term(mono, c);
  return f;
}

QPolynomial QPolynomial::monomial(RingSpec ring, Monomial mono) {
  const FieldElement one = ring.field.one();
  return monomial(std::move(ring), std::move(mono), one);
}

QPolynomial QPolynomial::variable(RingSpec ring, int i) {
  Monomial mono = Monomial::unit(ring.n);
  mono[i] = 1;
  return monomial(std::move(ring), std::move(mono));
}

bool QPolynomial::admissible(const Monomial& mono) const {
  if (!ring_.m) return true;
  const std::uint64_t cap = ring_.cap();
  return std::all_of(mono.exponents().begin(), mono.exponents().end(), [cap](std::uint32_t a) { return a < cap; });
}

FieldElement QPolynomial::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? FieldElement{} : it->second;
}

long long QPolynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long long>(terms_.begin()->first.degree());
}

bool QPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

void QPolynomial::add_term(const Monomial& mono, FieldElement c) {
  if (c.is_zero() || !admissible(mono)) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second = ring_.field.add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (!(ring_ == rhs.ring_)) throw std::invalid_argument("ring mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (!(ring_ == rhs.ring_)) throw std::invalid_argument("ring mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, ring_.field.neg(c));
  return *this;
}

QPolynomial QPolynomial::operator-() const { return scaled(ring_.field.neg(ring_.field.one())); }

QPolynomial QPolynomial::scaled(FieldElement c) const {
  QPolynomial out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [mono, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono, ring_.field.mul(a, c));
  return out;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) { return poly_mul(a, b); }

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [mono, c] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    const bool constant = mono.degree() == 0;
    bool need_star = false;
    if (constant || c != ring_.field.one()) {
      os << ring_.field.format(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (mono[i] != 1) os << '^' << mono[i];
      need_star = true;
    }
  }
  return os.str();
}

std::vector<Monomial> monomial_basis(const RingSpec& ring, std::uint64_t d) {
  if (!ring.capped()) throw std::invalid_argument("infinite basis");
  std::vector<Monomial> out;
  const std::uint64_t bound = ring.cap() - 1;
  const int n = ring.n;
  if (d > static_cast<std::uint64_t>(n) * bound) return out;

  std::vector<std::uint32_t> exps(n, 0);
  // Fill positions left to right, largest exponent first, giving lex-descending order.
  auto rec = [&](auto&& self, int pos, std::uint64_t remaining) -> void {
    if (pos == n - 1) {
      if (remaining <= bound) {
        exps[pos] = static_cast<std::uint32_t>(remaining);
        out.emplace_back(exps);
      }
      return;
    }
    const std::uint64_t rest_capacity = static_cast<std::uint64_t>(n - 1 - pos) * bound;
    const std::uint64_t hi = std::min(remaining, bound);
    const std::uint64_t lo = remaining > rest_capacity ? remaining - rest_capacity : 0;
    for (std::uint64_t a = hi + 1; a-- > lo;) {
      exps[pos] = static_cast<std::uint32_t>(a);
      self(self, pos + 1, remaining - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

QPolynomial poly_mul(const QPolynomial& f, const QPolynomial& g) {
  if (!(f.ring() == g.ring())) throw std::invalid_argument("ring mismatch");
  QPolynomial out(f.ring());
  const FieldSpec& F = f.field();
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) out.add_term(ma * mb, F.mul(ca, cb));
  return out;
}

QPolynomial poly_pow(const QPolynomial& f, std::uint64_t k) {
  QPolynomial result = QPolynomial::constant(f.ring(), f.field().one());
  QPolynomial base = f;
  while (k > 0) {
    if (k & 1) result = poly_mul(result, base);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

QPolynomial substitute_linear(const QPolynomial& f, const GFMatrix& M) {
  const RingSpec& R = f.ring();
  if (M.rows() != static_cast<std::size_t>(R.n) || M.cols() != static_cast<std::size_t>(R.n))
    throw std::invalid_argument("substitution matrix dimension mismatch");
  if (!(M.field() == R.field)) throw std::invalid_argument("field mismatch");

  std::vector<std::uint32_t> max_exp(R.n, 0);
  for (const auto& [mono, c] : f.terms())
    for (int j = 0; j < R.n; ++j) max_exp[j] = std::max(max_exp[j], mono[j]);

  // powers[j][k] = (image of x_j)^k
  std::vector<std::vector<QPolynomial>> powers(R.n);
  for (int j = 0; j < R.n; ++j) {
    QPolynomial image(R);
    for (int i = 0; i < R.n; ++i) {
      const FieldElement c = M.at(i, j);
      if (c.is_zero()) continue;
      image += QPolynomial::variable(R, i).scaled(c);
    }
    powers[j].reserve(max_exp[j] + 1);
    powers[j].push_back(QPolynomial::constant(R, R.field.one()));
    for (std::uint32_t k = 1; k <= max_exp[j]; ++k) powers[j].push_back(poly_mul(powers[j].back(), image));
  }

  QPolynomial out(R);
  for (const auto& [mono, c] : f.terms()) {
    QPolynomial term = QPolynomial::constant(R, c);
    for (int j = 0; j < R.n && !term.is_zero(); ++j)
      if (mono[j] > 0) term = poly_mul(term, powers[j][mono[j]]);
    out += term;
  }
  return out;
}

QPolynomial graded_component(const QPolynomial& f, std::uint64_t d) {
  QPolynomial out(f.ring());
  for (const auto& [mono, c] : f.terms())
    if (mono.degree() == d) out.add_term(mono, c);
  return out;
}

QPolynomial project_to_Q(const QPolynomial& f, int m) {
  if (f.ring().capped()) throw std::invalid_argument("project_to_Q expects an uncapped ring");
  return change_ring(f, RingSpec::truncated(f.field(), f.ring().n, m));
}

QPolynomial change_ring(const QPolynomial& f, const RingSpec& target) {
  if (target.n < f.ring().n || !(target.field == f.field())) throw std::invalid_argument("incompatible target ring");
  QPolynomial out(target);
  if (target.n == f.ring().n) {
    for (const auto& [mono, c] : f.terms()) out.add_term(mono, c);
    return out;
  }
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::uint32_t> e(mono.exponents().begin(), mono.exponents().end());
    e.resize(target.n, 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::optional<FieldElement> scalar_ratio(const QPolynomial& f, const QPolynomial& g) {
  if (g.is_zero()) return std::nullopt;
  if (!(f.ring() == g.ring())) throw std::invalid_argument("ring mismatch");
  const FieldSpec& F = f.field();
  const auto& [lead, cg] = *g.terms().begin();
  const FieldElement c = F.div(f.coefficient(lead), cg);
  if (g.scaled(c) == f) return c;
  return std::nullopt;
}

}  // namespace modinv
