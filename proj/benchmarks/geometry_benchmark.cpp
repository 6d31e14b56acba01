// Copyright 2026 The Grasscode Authors
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

#include <benchmark/benchmark.h>

#include "grasscode/grassmann.hpp"
#include "grasscode/random_stream.hpp"
#include "grasscode/sampling.hpp"

namespace grasscode {
namespace {

void BM_ChordalProduct(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  RandomStream rng(1);
  const GrassmannPoint a = sample_uniform(t, m, rng);
  const GrassmannPoint b = sample_uniform(t, m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(chordal_product(a, b));
}
BENCHMARK(BM_ChordalProduct)->Args({2, 1})->Args({10, 2})->Args({16, 4})->Args({64, 8});

void BM_SampleUniform(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  RandomStream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform(t, m, rng));
}
BENCHMARK(BM_SampleUniform)->Args({10, 2})->Args({64, 8});

void BM_CodeEnergy(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  RandomStream rng(3);
  std::vector<GrassmannPoint> pts;
  for (int i = 0; i < k; ++i) pts.push_back(sample_uniform(10, 2, rng));
  const Code code(std::move(pts));
  for (auto _ : state) benchmark::DoNotOptimize(code_energy(code, 1));
  state.SetComplexityN(k);
}
BENCHMARK(BM_CodeEnergy)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oNSquared);

}  // namespace
}  // namespace grasscode
