// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "waveletn/waveletn.hpp"

namespace {

using namespace waveletn;

LaurentPoly d4_m0() {
  const double r3 = std::sqrt(3.0), q = 4.0 * std::sqrt(2.0);
  return LaurentPoly{{0, (1 + r3) / q}, {1, (3 + r3) / q}, {2, (3 - r3) / q}, {3, (1 - r3) / q}};
}

LaurentPoly random_signal(int length) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  LaurentPoly f;
  for (int k = 0; k < length; ++k) f.set(k, {g(rng), g(rng)});
  return f;
}

void BM_Analyze(benchmark::State& state) {
  const FilterBank bank = complete(d4_m0(), 2);
  const LaurentPoly f = random_signal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(bank, f, 6));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Synthesize(benchmark::State& state) {
  const FilterBank bank = complete(d4_m0(), 2);
  const WaveletCoeffs c = analyze(bank, random_signal(static_cast<int>(state.range(0))), 6);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(bank, c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Synthesize)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_TransferFixedSpace(benchmark::State& state) {
  const LaurentPoly m0 = d4_m0();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_space(build_transfer(m0, 2, d)));
}
BENCHMARK(BM_TransferFixedSpace)->Arg(3)->Arg(16)->Arg(64)->Arg(128);

void BM_Cascade(benchmark::State& state) {
  const LaurentPoly m0 = d4_m0();
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cascade_iterate(m0, 2, L));
}
BENCHMARK(BM_Cascade)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_InfiniteProduct(benchmark::State& state) {
  const LaurentPoly m0 = d4_m0();
  const auto t = default_t_grid();
  for (auto _ : state) benchmark::DoNotOptimize(infinite_product(m0, 2, t));
}
BENCHMARK(BM_InfiniteProduct);

void BM_Cobound(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> a(0.0, 6.283185307179586);
  std::size_t words = 3;
  for (int i = 0; i < p; ++i) words *= 3;
  std::vector<cplx> table(words);
  for (auto& v : table) v = std::polar(1.0, a(rng));
  const CylinderCocycle u(3, p, table);
  for (auto _ : state) benchmark::DoNotOptimize(cobound(u));
}
BENCHMARK(BM_Cobound)->DenseRange(1, 6);

}  // namespace

BENCHMARK_MAIN();
