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

#include "modinv/steenrod.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "modinv/families.hpp"
#include "modinv/qseries.hpp"

namespace modinv {

SteenrodExpansion total_steenrod(const QPolynomial& f) {
  const RingSpec& R = f.ring();
  const FieldSpec& F = R.field;
  const std::uint64_t step = F.q() - 1;
  const long long deg = f.degree();
  SteenrodExpansion out;
  out.components.assign(static_cast<std::size_t>(std::max(deg, 0LL) + 1), QPolynomial(R));

  for (const auto& [mono, coeff] : f.terms()) {
    // (x_i + x_i^q xi)^a = sum_k C(a, k) x_i^{a + (q-1)k} xi^k, one variable at a time.
    std::vector<QPolynomial> acc(1, QPolynomial::constant(R, coeff));
    for (int i = 0; i < R.n; ++i) {
      const std::uint32_t a = mono[i];
      if (a == 0) continue;
      std::vector<QPolynomial> next(acc.size() + a, QPolynomial(R));
      for (std::size_t k0 = 0; k0 < acc.size(); ++k0)
        for (std::uint32_t k = 0; k <= a; ++k) {
          const std::uint32_t binom = lucas_binomial(a, k, F.p());
          if (binom == 0) continue;
          const FieldElement c = F.from_int(binom);
          for (const auto& [m, v] : acc[k0].terms()) {
            Monomial raised = m;
            raised[i] = static_cast<std::uint32_t>(a + step * k);
            next[k0 + k].add_term(raised, F.mul(c, v));
          }
        }
      acc = std::move(next);
    }
    for (std::size_t k = 0; k < acc.size(); ++k) out.components[k] += acc[k];
  }
  return out;
}

QPolynomial steenrod_p(const QPolynomial& f, std::uint64_t i) {
  if (static_cast<long long>(i) > f.degree()) return QPolynomial(f.ring());
  return total_steenrod(f).components[i];
}

GenerationReport steenrod_generation_report(const FieldSpec& F, int m) {
  if (m < 2) throw std::invalid_argument("generation report needs m >= 2");
  const std::uint64_t q = F.q();
  GenerationReport rep;
  rep.q = q;
  rep.m = m;
  rep.bound = kprime_bound(q, m);
  const std::uint64_t L = rep.bound;

  std::vector<QPolynomial> family;
  for (std::uint64_t k = 0; k <= L; ++k) family.push_back(a_mnk(F, m, 2, k));

  // P^r raises degree by r(q-1), so P^r(a_k) can only be a multiple of a_{k+r}.
  std::map<std::uint64_t, std::vector<std::uint64_t>> out_edges;
  for (std::uint64_t k = 0; k <= L; ++k) {
    const auto expansion = total_steenrod(family[k]);
    for (std::uint64_t r = 1; r < expansion.components.size() && k + r <= L; ++r) {
      const QPolynomial& image = expansion.components[r];
      if (image.is_zero()) continue;
      if (const auto c = scalar_ratio(image, family[k + r])) {
        rep.edges.push_back({k, r, k + r, *c});
        out_edges[k].push_back(k + r);
      }
    }
  }

  rep.seeds.push_back(0);
  for (int t = 1; t <= m - 1; ++t) rep.seeds.push_back(1 + (ipow(q, t) - 1) / (q - 1));

  std::set<std::uint64_t> all;
  for (std::uint64_t seed : rep.seeds) {
    std::set<std::uint64_t> seen{seed};
    std::vector<std::uint64_t> stack{seed};
    while (!stack.empty()) {
      const std::uint64_t k = stack.back();
      stack.pop_back();
      for (std::uint64_t to : out_edges[k])
        if (seen.insert(to).second) stack.push_back(to);
    }
    rep.reach[seed] = {seen.begin(), seen.end()};
    all.insert(seen.begin(), seen.end());
  }
  rep.reached = {all.begin(), all.end()};
  rep.all_reached = all.size() == L + 1;

  auto claim = [&](std::uint64_t seed, std::uint64_t lo, std::uint64_t hi) {
    ClaimedRange c{seed, lo, std::min(hi, L), hi > L, true};
    const auto& got = rep.reach[seed];
    for (std::uint64_t k = c.lo; k <= c.hi; ++k)
      if (!std::binary_search(got.begin(), got.end(), k)) c.holds = false;
    rep.claims.push_back(c);
  };
  claim(0, 0, 1);
  for (int t = 1; t <= m - 1; ++t) {
    const std::uint64_t seed = 1 + (ipow(q, t) - 1) / (q - 1);
    claim(seed, seed, seed + ipow(q, t) - (t == m - 1 ? 1 : 0));
  }
  rep.pattern_holds = rep.all_reached && std::all_of(rep.claims.begin(), rep.claims.end(), [](const auto& c) { return c.holds; });
  return rep;
}

SumCheckReport binomial_sum_check(std::uint64_t q, int m, int t, std::uint64_t r) {
  const auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument("q is not a prime power");
  if (m < 2 || t < 1 || t > m - 1) throw std::invalid_argument("parameters outside the sum's domain");
  const auto p = static_cast<std::uint32_t>(pe->first);

  const long long num = static_cast<long long>(ipow(q, m)) - static_cast<long long>(ipow(q, t)) - 2 * static_cast<long long>(q) + 2;
  const auto den = static_cast<long long>(q - 1);
  if (num < 0 || num % den != 0) throw std::invalid_argument("parameters outside the sum's domain");

  SumCheckReport rep;
  rep.q = q;
  rep.m = m;
  rep.t = t;
  rep.r = r;
  rep.upper = static_cast<std::uint64_t>(num / den);
  const std::uint64_t L = kprime_bound(q, m);
  const std::uint64_t offset = (ipow(q, t) + q - 2) / (q - 1);
  if (rep.upper > L) throw std::invalid_argument("parameters outside the sum's domain");

  for (std::uint64_t j = 0; j <= r; ++j) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i <= rep.upper; ++i)
      acc = (acc + static_cast<std::uint64_t>(lucas_binomial((q - 1) * (L - i), j, p)) * lucas_binomial((q - 1) * (offset + i), r - j, p)) % p;
    rep.values.push_back(static_cast<std::uint32_t>(acc));
  }
  rep.independent = std::all_of(rep.values.begin(), rep.values.end(), [&](std::uint32_t v) { return v == rep.values.front(); });
  return rep;
}

}  // namespace modinv
