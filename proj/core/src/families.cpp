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

#include "modinv/families.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "modinv/qseries.hpp"

namespace modinv {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 13> kTagNames{{
    {FamilyTag::Dickson, "dickson"},
    {FamilyTag::Zn, "zn"},
    {FamilyTag::Ynk, "ynk"},
    {FamilyTag::Ykprime, "ykprime"},
    {FamilyTag::Amnk, "amnk"},
    {FamilyTag::S0, "s0"},
    {FamilyTag::S1, "s1"},
    {FamilyTag::SPower, "spower"},
    {FamilyTag::ParA, "para"},
    {FamilyTag::ParB, "parb"},
    {FamilyTag::ParC, "parc"},
    {FamilyTag::ParD, "pard"},
    {FamilyTag::Q2DicksonSeed, "q2step"},
}};

QPolynomial x_power(const RingSpec& R, int i, std::uint64_t e) {
  Monomial mono = Monomial::unit(R.n);
  mono[i] = static_cast<std::uint32_t>(e);
  return QPolynomial::monomial(R, std::move(mono));
}

// prod_{j < count} x_j^{q^2 - 1}; empty product is 1.
QPolynomial head_product(const RingSpec& R, int count) {
  const std::uint64_t q = R.field.q();
  Monomial mono = Monomial::unit(R.n);
  for (int j = 0; j < count; ++j) mono[j] = static_cast<std::uint32_t>(q * q - 1);
  return QPolynomial::monomial(R, std::move(mono));
}

std::vector<int> index_range(int from, int to) {
  std::vector<int> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw std::invalid_argument("bad integer list");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view text) {
  for (const auto& [t, name] : kTagNames)
    if (name == text) return t;
  return std::nullopt;
}

std::uint64_t kprime_bound(std::uint64_t q, int m) { return (ipow(q, m) - q) / (q - 1); }

std::vector<QPolynomial> functional_product(const FieldSpec& F, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const RingSpec S = RingSpec::polynomial(F, n);
  const std::uint64_t count = ipow(F.q(), n);
  if (count > 4096) throw std::invalid_argument("too many linear functionals to enumerate");

  std::vector<QPolynomial> coeffs(1, QPolynomial::constant(S, F.one()));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    QPolynomial l(S);
    std::uint64_t v = idx;
    for (int i = 0; i < n; ++i) {
      l += QPolynomial::variable(S, i).scaled(F.element(static_cast<std::uint32_t>(v % F.q())));
      v /= F.q();
    }
    // (sum_k c_k t^k)(t + l)
    std::vector<QPolynomial> next(coeffs.size() + 1, QPolynomial(S));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] += poly_mul(coeffs[k], l);
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<QPolynomial> dickson(const FieldSpec& F, int n) {
  const auto coeffs = functional_product(F, n);
  std::vector<QPolynomial> out;
  std::uint64_t next_power = 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k == next_power) {
      out.push_back(coeffs[k]);
      next_power *= F.q();
    } else if (!coeffs[k].is_zero()) {
      throw std::logic_error("nonzero coefficient at a non-q-power of t");
    }
  }
  return out;
}

QPolynomial bounded_exponent_sum(const RingSpec& ring, std::span<const int> vars, std::uint64_t target, std::uint64_t bound) {
  const std::uint64_t step = ring.field.q() - 1;
  QPolynomial out(ring);
  Monomial mono = Monomial::unit(ring.n);
  const int r = static_cast<int>(vars.size());
  auto rec = [&](auto&& self, int pos, std::uint64_t remaining) -> void {
    if (pos == r) {
      if (remaining == 0) out.add_term(mono, ring.field.one());
      return;
    }
    const std::uint64_t capacity = static_cast<std::uint64_t>(r - pos - 1) * bound;
    const std::uint64_t hi = std::min(remaining, bound);
    const std::uint64_t lo = remaining > capacity ? remaining - capacity : 0;
    for (std::uint64_t i = lo; i <= hi; ++i) {
      mono[vars[pos]] = static_cast<std::uint32_t>(i * step);
      self(self, pos + 1, remaining - i);
    }
    mono[vars[pos]] = 0;
  };
  if (r == 0) {
    if (target == 0) out.add_term(mono, ring.field.one());
    return out;
  }
  rec(rec, 0, target);
  return out;
}

QPolynomial z_n(const FieldSpec& F, int n) { return head_product(RingSpec::truncated(F, n, 2), n); }

QPolynomial y_nk(const FieldSpec& F, int n, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const RingSpec R = RingSpec::truncated(F, n, 2);
  const std::uint64_t q = F.q();
  const auto vars = index_range(0, n);
  return bounded_exponent_sum(R, vars, static_cast<std::uint64_t>(n - 1) * q + k, q);
}

QPolynomial a_mnk(const FieldSpec& F, int m, int n, std::uint64_t kprime) {
  const std::uint64_t L = kprime_bound(F.q(), m);
  if (kprime > L) throw std::invalid_argument("k' out of range [0, (q^m - q)/(q - 1)]");
  const RingSpec R = RingSpec::truncated(F, n, m);
  const auto vars = index_range(0, n);
  return bounded_exponent_sum(R, vars, static_cast<std::uint64_t>(n - 1) * L + kprime, L);
}

bool a_recurrence_check(const FieldSpec& F, int m, int n, std::uint64_t kprime) {
  if (n < 2) throw std::invalid_argument("recurrence needs n >= 2");
  const std::uint64_t L = kprime_bound(F.q(), m);
  const RingSpec R = RingSpec::truncated(F, n, m);
  QPolynomial rhs(R);
  for (std::uint64_t i = kprime; i <= L; ++i)
    rhs += poly_mul(change_ring(a_mnk(F, m, n - 1, L + kprime - i), R), x_power(R, n - 1, i * (F.q() - 1)));
  return a_mnk(F, m, n, kprime) == rhs;
}

bool y_closed_form_check(const FieldSpec& F, int k) {
  const std::uint64_t q = F.q();
  if (k < 0 || static_cast<std::uint64_t>(k) > q) throw std::invalid_argument("k must lie in [0, q]");
  const RingSpec S = RingSpec::polynomial(F, 2);
  const std::array<int, 2> vars{0, 1};
  const QPolynomial y = bounded_exponent_sum(S, vars, q + k, q);
  const QPolynomial lhs = poly_mul(x_power(S, 0, q - 1) - x_power(S, 1, q - 1), y);
  const std::uint64_t tail = (q - k + 1) * (q - 1);
  const QPolynomial rhs = poly_mul(QPolynomial::monomial(S, Monomial{static_cast<std::uint32_t>(k * (q - 1)),
                                                                     static_cast<std::uint32_t>(k * (q - 1))}),
                                   x_power(S, 0, tail) - x_power(S, 1, tail));
  return lhs == rhs;
}

SImages s_polynomials(const FieldSpec& F) {
  const std::uint64_t q = F.q();
  const RingSpec S = RingSpec::polynomial(F, 2);
  QPolynomial s0(S);
  for (std::uint64_t i = 0; i <= q; ++i)
    s0.add_term(Monomial{static_cast<std::uint32_t>((q - i) * (q - 1)), static_cast<std::uint32_t>(i * (q - 1))}, F.one());
  QPolynomial s1 = poly_mul(s0, x_power(S, 1, q - 1)) - x_power(S, 1, q * q - 1);
  return {std::move(s0), std::move(s1)};
}

SImages s_images(const FieldSpec& F, int m) {
  if (m < 2) throw std::invalid_argument("S images need m >= 2");
  auto [s0, s1] = s_polynomials(F);
  return {project_to_Q(s0, m), project_to_Q(s1, m)};
}

QPolynomial s_power(const FieldSpec& F, int a, int b) {
  const std::uint64_t q = F.q();
  if (a < 0 || b < 0 || static_cast<std::uint64_t>(a) > q || static_cast<std::uint64_t>(b) > q - 1)
    throw std::invalid_argument("s_power requires 0 <= a <= q and 0 <= b <= q - 1");
  const auto [s0, s1] = s_images(F, 3);
  return poly_mul(poly_pow(s1, a), poly_pow(s0, b));
}

std::string to_string(const ParabolicMember& which) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, ParA>) os << "a";
        else if constexpr (std::is_same_v<T, ParB>) os << "b:" << w.r << ',' << w.k;
        else if constexpr (std::is_same_v<T, ParC>) os << "c:" << w.r << ',' << w.s << ',' << w.k;
        else os << "d:" << w.r;
      },
      which);
  return os.str();
}

ParabolicMember parse_parabolic_member(std::string_view text) {
  if (text == "a") return ParA{};
  if (text.size() < 3 || text[1] != ':') throw std::invalid_argument("bad parabolic member: " + std::string(text));
  const auto args = parse_ints(text.substr(2));
  switch (text[0]) {
    case 'b':
      if (args.size() == 2) return ParB{args[0], args[1]};
      break;
    case 'c':
      if (args.size() == 3) return ParC{args[0], args[1], args[2]};
      break;
    case 'd':
      if (args.size() == 1) return ParD{args[0]};
      break;
  }
  throw std::invalid_argument("bad parabolic member: " + std::string(text));
}

namespace {

void check_member(std::uint64_t q, const Composition& alpha, const ParabolicMember& which) {
  const int l = alpha.length();
  const auto bad = [] { throw std::invalid_argument("parabolic family parameters out of range"); };
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, ParB>) {
          if (w.r < 1 || w.r > l || w.k < 0 || static_cast<std::uint64_t>(w.k) > q) bad();
        } else if constexpr (std::is_same_v<T, ParC>) {
          if (w.r < 1 || w.r >= w.s || w.s > l || w.k < 0 || static_cast<std::uint64_t>(w.k) > q) bad();
        } else if constexpr (std::is_same_v<T, ParD>) {
          if (w.r < 1 || w.r > l || alpha.part(w.r) < 2) bad();
        }
      },
      which);
}

}  // namespace

QPolynomial parabolic_family(const FieldSpec& F, const Composition& alpha, const ParabolicMember& which) {
  const std::uint64_t q = F.q();
  check_member(q, alpha, which);
  const int n = alpha.n();
  const RingSpec R = RingSpec::truncated(F, n, 2);
  return std::visit(
      [&](const auto& w) -> QPolynomial {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, ParA>) {
          return head_product(R, n);
        } else if constexpr (std::is_same_v<T, ParB>) {
          const int start = alpha.partial_sum(w.r - 1);
          const auto vars = index_range(start, n);
          const std::uint64_t target = static_cast<std::uint64_t>(n - start - 1) * q + w.k;
          return poly_mul(head_product(R, start), bounded_exponent_sum(R, vars, target, q));
        } else if constexpr (std::is_same_v<T, ParC>) {
          const int start = alpha.partial_sum(w.r - 1);
          const int stop = alpha.partial_sum(w.s - 1);
          const auto vars = index_range(start, stop);
          const std::uint64_t target = static_cast<std::uint64_t>(stop - start - 1) * q + w.k;
          return poly_mul(head_product(R, start), bounded_exponent_sum(R, vars, target, q));
        } else {
          return head_product(R, alpha.partial_sum(w.r - 1));
        }
      },
      which);
}

std::uint64_t parabolic_family_degree(std::uint64_t q, const Composition& alpha, const ParabolicMember& which) {
  check_member(q, alpha, which);
  const std::uint64_t n = alpha.n();
  const std::uint64_t z = q * q - 1;
  return std::visit(
      [&](const auto& w) -> std::uint64_t {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, ParA>) {
          return n * z;
        } else if constexpr (std::is_same_v<T, ParB>) {
          const std::uint64_t a = alpha.partial_sum(w.r - 1);
          return a * z + ((n - a - 1) * q + w.k) * (q - 1);
        } else if constexpr (std::is_same_v<T, ParC>) {
          const std::uint64_t a = alpha.partial_sum(w.r - 1);
          const std::uint64_t b = alpha.partial_sum(w.s - 1);
          return a * z + ((b - a - 1) * q + w.k) * (q - 1);
        } else {
          return static_cast<std::uint64_t>(alpha.partial_sum(w.r - 1)) * z;
        }
      },
      which);
}

QPolynomial q2_dickson_step(const FieldSpec& F, int m, const QPolynomial& f) {
  if (F.q() != 2) throw std::invalid_argument("q2_dickson_step requires q = 2");
  const RingSpec R = RingSpec::truncated(F, 2, m);
  if (!(f.ring() == R)) throw std::invalid_argument("f must live in the two-variable m-capped ring");
  QPolynomial d(R);
  d.add_term(Monomial{2, 0}, F.one());
  d.add_term(Monomial{1, 1}, F.one());
  d.add_term(Monomial{0, 2}, F.one());
  return poly_mul(d, f);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> rep_decompose(std::uint64_t q, std::uint64_t a) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (a > q * q * q - q * q) throw std::invalid_argument("a outside [0, q^3 - q^2]");
  const std::uint64_t big = q * q - 1, small = q * q - q;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> found;
  for (std::uint64_t u = 0; u * big <= a; ++u) {
    const std::uint64_t rest = a - u * big;
    if (rest % small != 0) continue;
    if (found) throw std::logic_error("representation is not unique");
    found = std::pair{u, rest / small};
  }
  return found;
}

}  // namespace modinv
