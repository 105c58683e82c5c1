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

#include "modinv/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "modinv/families.hpp"

namespace modinv {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

TPoly::TPoly(std::initializer_list<long long> dense) {
  std::uint64_t d = 0;
  for (long long c : dense) add_coeff(d++, BigInt(c));
}

TPoly TPoly::monomial(std::uint64_t degree, BigInt c) {
  TPoly t;
  t.add_coeff(degree, c);
  return t;
}

TPoly TPoly::one_minus_t_pow(std::uint64_t k) { return constant(1) - monomial(k); }

TPoly TPoly::geometric(std::uint64_t step, std::uint64_t count) {
  TPoly t;
  for (std::uint64_t i = 0; i < count; ++i) t.add_coeff(i * step, 1);
  return t;
}

void TPoly::add_coeff(std::uint64_t d, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

BigInt TPoly::coefficient(std::uint64_t d) const {
  const auto it = c_.find(d);
  return it == c_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> TPoly::dense() const {
  std::vector<BigInt> out(static_cast<std::size_t>(degree() + 1));
  for (const auto& [d, c] : c_) out[d] = c;
  return out;
}

std::vector<std::uint64_t> TPoly::support() const {
  std::vector<std::uint64_t> out;
  for (const auto& [d, c] : c_) out.push_back(d);
  return out;
}

bool TPoly::has_nonnegative_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second > 0; });
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
  for (const auto& [d, c] : rhs.c_) add_coeff(d, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
  for (const auto& [d, c] : rhs.c_) add_coeff(d, -c);
  return *this;
}

TPoly TPoly::shifted(std::uint64_t k) const {
  TPoly out;
  for (const auto& [d, c] : c_) out.c_.emplace_hint(out.c_.end(), d + k, c);
  return out;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly out;
  for (const auto& [da, ca] : a.c_)
    for (const auto& [db, cb] : b.c_) out.add_coeff(da + db, ca * cb);
  return out;
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : c_) {
    BigInt v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (d == 0) {
      os << v;
      continue;
    }
    if (v != 1) os << v << '*';
    os << 't';
    if (d != 1) os << '^' << d;
  }
  return os.str();
}

TPoly tpoly_pow(const TPoly& f, std::uint64_t k) {
  TPoly result = TPoly::constant(1);
  for (std::uint64_t i = 0; i < k; ++i) result = result * f;
  return result;
}

TPoly tpoly_exact_div(const TPoly& num, const TPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return {};
  std::vector<BigInt> rem = num.dense();
  const std::vector<BigInt> d = den.dense();
  const std::size_t dd = d.size() - 1;
  if (rem.size() - 1 < dd) throw InexactDivision();
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (rem[i] % d[dd] != 0) throw InexactDivision();
    const BigInt c = rem[i] / d[dd];
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InexactDivision();
  TPoly out;
  for (std::size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0) out += TPoly::monomial(i, quot[i]);
  return out;
}

TPoly qbinom(int m, int k, std::uint64_t q) {
  if (k < 0 || k > m) throw std::invalid_argument("qbinom requires 0 <= k <= m");
  TPoly num = TPoly::constant(1), den = TPoly::constant(1);
  for (int i = 0; i < k; ++i) {
    num = num * TPoly::one_minus_t_pow(ipow(q, m) - ipow(q, i));
    den = den * TPoly::one_minus_t_pow(ipow(q, k) - ipow(q, i));
  }
  TPoly out = tpoly_exact_div(num, den);
  if (!out.has_nonnegative_coefficients()) throw std::logic_error("qbinom produced a negative coefficient");
  return out;
}

TPoly conjectured_series(std::uint64_t q, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("conjectured_series requires n, m >= 1");
  TPoly sum;
  for (int k = 0; k <= std::min(n, m); ++k)
    sum += qbinom(m, k, q).shifted(static_cast<std::uint64_t>(n - k) * (ipow(q, m) - ipow(q, k)));
  return sum;
}

BetaVector::BetaVector(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int b : parts_)
    if (b < 0) throw std::invalid_argument("beta parts must be nonnegative");
}

int BetaVector::partial_sum(int i) const {
  int s = 0;
  for (int k = 0; k < i; ++k) s += parts_[k];
  return s;
}

std::string BetaVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

TPoly gaussian_multinomial(int m, const BetaVector& beta, std::uint64_t q, NumeratorIndex start) {
  if (beta.size() > m) throw std::invalid_argument("|beta| exceeds m");
  std::vector<int> blocks = beta.parts();
  blocks.push_back(m - beta.size());

  TPoly num = TPoly::constant(1);
  for (int j = static_cast<int>(start); j <= m - 1; ++j) num = num * TPoly::one_minus_t_pow(ipow(q, m) - ipow(q, j));
  TPoly den = TPoly::constant(1);
  int before = 0;
  for (int size : blocks) {
    const int after = before + size;
    for (int j = 0; j < size; ++j) den = den * TPoly::one_minus_t_pow(ipow(q, after) - ipow(q, before + j));
    before = after;
  }
  return tpoly_exact_div(num, den);
}

std::uint64_t parabolic_exponent(int m, const Composition& alpha, const BetaVector& beta, std::uint64_t q) {
  if (beta.length() != alpha.length()) throw std::invalid_argument("beta and alpha lengths differ");
  std::uint64_t e = 0;
  for (int i = 1; i <= alpha.length(); ++i) {
    const int diff = alpha.part(i) - beta.parts()[i - 1];
    if (diff < 0) throw std::invalid_argument("beta exceeds alpha");
    e += static_cast<std::uint64_t>(diff) * (ipow(q, m) - ipow(q, beta.partial_sum(i)));
  }
  return e;
}

std::vector<BetaVector> enumerate_betas(const Composition& alpha, int m) {
  std::vector<BetaVector> out;
  std::vector<int> cur(alpha.length(), 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == alpha.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int b = 0; b <= alpha.part(pos + 1) && used + b <= m; ++b) {
      cur[pos] = b;
      self(self, pos + 1, used + b);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<ParabolicTerm> parabolic_terms(std::uint64_t q, const Composition& alpha, int m, NumeratorIndex start) {
  std::vector<ParabolicTerm> out;
  for (auto& beta : enumerate_betas(alpha, m)) {
    const std::uint64_t e = parabolic_exponent(m, alpha, beta, q);
    TPoly term = gaussian_multinomial(m, beta, q, start).shifted(e);
    out.push_back({std::move(beta), e, std::move(term)});
  }
  return out;
}

TPoly parabolic_conjectured_series(std::uint64_t q, const Composition& alpha, int m, NumeratorIndex start) {
  TPoly sum;
  for (const auto& t : parabolic_terms(q, alpha, m, start)) sum += t.term;
  return sum;
}

FSupportReport f_support_analysis(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  FSupportReport r;
  r.q = q;
  r.f = qbinom(3, 2, q);
  r.support = r.f.support();
  r.zero_one_coefficients = std::all_of(r.f.coeffs().begin(), r.f.coeffs().end(), [](const auto& kv) { return kv.second == 1; });

  const std::uint64_t half = q * q * q - q * q;
  r.representability_matches = true;
  for (std::uint64_t a = 0; a <= half; ++a) {
    const bool representable = rep_decompose(q, a).has_value();
    if ((r.f.coefficient(a) == 1) != representable) r.representability_matches = false;
  }
  r.palindromic = r.f.degree() == static_cast<long long>(2 * half);
  for (std::uint64_t a = 0; a <= 2 * half && r.palindromic; ++a)
    if (r.f.coefficient(a) != r.f.coefficient(2 * half - a)) r.palindromic = false;
  return r;
}

BigInt s_power_witness_coefficient(std::uint64_t q) {
  const TPoly base = TPoly::geometric(1, q + 1);  // (1 - t^{q+1}) / (1 - t)
  return tpoly_pow(base, 2 * q - 1).coefficient(q * q + q);
}

}  // namespace modinv
