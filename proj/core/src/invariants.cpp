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

#include "modinv/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace modinv {

namespace {

using MonomialIndex = std::map<Monomial, std::size_t>;

MonomialIndex index_of(const std::vector<Monomial>& basis) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::vector<Monomial> candidates_for(const RingSpec& R, std::uint64_t d, bool prefilter) {
  std::vector<Monomial> basis = monomial_basis(R, d);
  const std::uint32_t step = R.field.q() - 1;
  if (!prefilter || step == 1) return basis;
  std::erase_if(basis, [step](const Monomial& mono) {
    return std::any_of(mono.exponents().begin(), mono.exponents().end(), [step](std::uint32_t e) { return e % step != 0; });
  });
  return basis;
}

void check_compatible(const RingSpec& R, const GroupGeneratorSet& gens) {
  if (!R.capped()) throw std::invalid_argument("invariant computations need a capped ring");
  if (R.n != gens.n || !(R.field == gens.field)) throw std::invalid_argument("ring/field mismatch");
}

}  // namespace

GFMatrix invariant_condition_matrix(const RingSpec& R, const GroupGeneratorSet& gens, std::uint64_t d,
                                    const std::vector<Monomial>& candidates) {
  const FieldSpec& F = R.field;
  const auto full = monomial_basis(R, d);
  const auto index = index_of(full);
  GFMatrix out(F, 0, candidates.size());
  for (const auto& g : gens.generators) {
    // Sparse rows keyed by full-basis index; only rows that are hit survive.
    std::map<std::size_t, std::vector<std::pair<std::size_t, FieldElement>>> rows;
    for (std::size_t col = 0; col < candidates.size(); ++col) {
      QPolynomial image = substitute_linear(QPolynomial::monomial(R, candidates[col]), g.matrix);
      image.add_term(candidates[col], F.neg(F.one()));
      for (const auto& [mono, c] : image.terms()) rows[index.at(mono)].emplace_back(col, c);
    }
    GFMatrix block(F, rows.size(), candidates.size());
    std::size_t r = 0;
    for (const auto& [_, entries] : rows) {
      for (const auto& [col, c] : entries) block.at(r, col) = c;
      ++r;
    }
    out.append_rows(block);
  }
  return out;
}

std::vector<QPolynomial> canonical_basis(const std::vector<QPolynomial>& polys, const RingSpec& R, std::uint64_t d) {
  if (polys.empty()) return {};
  const auto full = monomial_basis(R, d);
  const auto index = index_of(full);
  GFMatrix M(R.field, polys.size(), full.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [mono, c] : polys[i].terms()) {
      const auto it = index.find(mono);
      if (it == index.end()) throw std::invalid_argument("polynomial is not homogeneous of the requested degree");
      M.at(i, it->second) = c;
    }
  const auto pivots = rref(M);
  std::vector<QPolynomial> out;
  out.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    QPolynomial p(R);
    for (std::size_t c = pivots[i]; c < full.size(); ++c)
      if (!M.at(i, c).is_zero()) p.add_term(full[c], M.at(i, c));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<QPolynomial> invariant_basis(const RingSpec& R, const GroupGeneratorSet& gens, std::uint64_t d,
                                         const InvariantOptions& opts) {
  check_compatible(R, gens);
  if (d > R.top_degree()) return {};
  const auto candidates = candidates_for(R, d, opts.prefilter);
  if (candidates.empty()) return {};
  const GFMatrix A = invariant_condition_matrix(R, gens, d, candidates);
  std::vector<QPolynomial> raw;
  for (const auto& v : kernel_basis(A)) {
    QPolynomial p(R);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) p.add_term(candidates[j], v[j]);
    raw.push_back(std::move(p));
  }
  return canonical_basis(raw, R, d);
}

TPoly conjectured_for(const RingSpec& R, const GroupGeneratorSet& gens, NumeratorIndex numerator) {
  const std::uint64_t q = R.field.q();
  if (gens.kind == GroupKind::Parabolic) {
    if (!gens.alpha) throw std::invalid_argument("parabolic generator set without a composition");
    return parabolic_conjectured_series(q, *gens.alpha, *R.m, numerator);
  }
  return conjectured_series(q, R.n, *R.m);
}

InvariantReport hilbert_series(const RingSpec& R, const GroupGeneratorSet& gens, const InvariantOptions& opts) {
  check_compatible(R, gens);
  InvariantReport report{R, gens.kind, gens.alpha, {}, {}, {}, false, {}};
  const std::uint64_t top = R.top_degree();
  report.conjectured = conjectured_for(R, gens, opts.numerator);
  report.degrees.resize(top + 1);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::uint64_t d = next++; d <= top; d = next++) {
        auto basis = invariant_basis(R, gens, d, opts);
        report.degrees[d] = DegreeRecord{d, basis.size(), std::move(basis)};
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = top + 1;
    }
  };
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, top + 1));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& rec : report.degrees)
    if (rec.dimension) report.computed += TPoly::monomial(rec.degree, rec.dimension);
  const long long top_deg = std::max(report.computed.degree(), report.conjectured.degree());
  for (std::uint64_t d = 0; static_cast<long long>(d) <= top_deg; ++d) {
    BigInt a = report.computed.coefficient(d), b = report.conjectured.coefficient(d);
    if (a != b) report.mismatches.push_back({d, std::move(a), std::move(b)});
  }
  report.match = report.mismatches.empty();
  return report;
}

}  // namespace modinv
