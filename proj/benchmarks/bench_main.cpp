// Copyright 2026 The tripartite-gme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <random>

#include <benchmark/benchmark.h>

#include "gme/gme.hpp"

namespace {

using namespace gme;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = Complex(g(rng), g(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

TripartiteState random_state(std::size_t d, std::uint64_t seed) {
  const std::size_t dims[] = {d, d, d};
  return white_noise_mix(TripartiteState::from_ket(d, random_pure(dims, seed)), 0.8);
}

void BM_HermitianEigenvalues(benchmark::State& st) {
  const auto h = random_hermitian(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(8)->Arg(27)->Arg(64);

void BM_SingularValues(benchmark::State& st) {
  const auto h = random_hermitian(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(singular_values(h));
}
BENCHMARK(BM_SingularValues)->Arg(8)->Arg(27)->Arg(64);

void BM_Decompose(benchmark::State& st) {
  const auto s = random_state(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(decompose(s));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(3)->Arg(4);

void BM_MPt(benchmark::State& st) {
  const auto s = random_state(2, 4);
  for (auto _ : st) benchmark::DoNotOptimize(m_pt(s));
}
BENCHMARK(BM_MPt);

void BM_M1Ct(benchmark::State& st) {
  const auto s = random_state(static_cast<std::size_t>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(m1_ct(s, ThresholdMode::theorem2));
}
BENCHMARK(BM_M1Ct)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
