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

#include <benchmark/benchmark.h>

#include <random>

#include "modinv/action.hpp"
#include "modinv/invariants.hpp"
#include "modinv/linalg.hpp"
#include "modinv/ring.hpp"

using namespace modinv;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto F = FieldSpec::of_order(static_cast<std::uint64_t>(state.range(0)));
  std::vector<FieldElement> xs;
  for (std::uint64_t c = 0; c < F.q(); ++c) xs.push_back(F.element(c));
  FieldElement acc = F.one();
  for (auto _ : state) {
    for (const auto& x : xs) acc = F.add(F.mul(acc, x), F.one());
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(9)->Arg(64)->Arg(251);

GFMatrix random_matrix(const FieldSpec& F, std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(7);
  GFMatrix A(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) A.at(r, c) = F.element(rng() % F.q());
  return A;
}

void BM_KernelBasis(benchmark::State& state) {
  const auto F = FieldSpec::of_order(3);
  const auto cols = static_cast<std::size_t>(state.range(0));
  const auto A = random_matrix(F, cols / 2, cols);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(A));
}
BENCHMARK(BM_KernelBasis)->Arg(64)->Arg(256)->Arg(512);

void BM_HilbertSeries(benchmark::State& state) {
  const auto F = FieldSpec::of_order(static_cast<std::uint64_t>(state.range(0)));
  const int n = static_cast<int>(state.range(1)), m = static_cast<int>(state.range(2));
  const auto R = RingSpec::truncated(F, n, m);
  const auto gens = gl_generators(F, n);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(R, gens));
}
BENCHMARK(BM_HilbertSeries)->Args({2, 2, 3})->Args({3, 2, 3})->Args({3, 3, 2})->Args({2, 3, 3})->Unit(benchmark::kMillisecond);

void BM_SubstituteLinear(benchmark::State& state) {
  const auto F = FieldSpec::of_order(3);
  const auto R = RingSpec::truncated(F, 3, 2);
  QPolynomial f(R);
  for (std::uint32_t i = 0; i < 9; ++i) f.add_term(Monomial{i, 8 - i, static_cast<std::uint32_t>(state.range(0))}, F.one());
  const auto gens = gl_generators(F, 3);
  for (auto _ : state)
    for (const auto& g : gens.generators) benchmark::DoNotOptimize(substitute_linear(f, g.matrix));
}
BENCHMARK(BM_SubstituteLinear)->Arg(0)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
