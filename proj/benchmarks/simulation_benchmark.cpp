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

#include "grasscode/designer.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/pep.hpp"
#include "grasscode/random_stream.hpp"
#include "grasscode/sampling.hpp"

namespace grasscode {
namespace {

void BM_EstimatePep(benchmark::State& state) {
  RandomStream rng(1);
  const GrassmannPoint a = sample_uniform(4, 1, rng);
  const GrassmannPoint b = sample_uniform(4, 1, rng);
  const ChannelConfig cfg{4, 1, 1, 10.0};
  const std::int64_t trials = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_pep(a, b, cfg, trials, RandomStream(2), {.threads = 1}));
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_EstimatePep)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_DesignerIterations(benchmark::State& state) {
  DesignRequest request;
  request.ambient_dim = 10;
  request.subspace_dim = 2;
  request.cardinality = static_cast<int>(state.range(0));
  request.iterations = 1000;
  request.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_code(request));
  state.SetItemsProcessed(state.iterations() * request.iterations);
}
BENCHMARK(BM_DesignerIterations)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace grasscode
