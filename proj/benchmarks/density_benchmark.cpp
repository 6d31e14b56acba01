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

#include "grasscode/bounds.hpp"
#include "grasscode/density.hpp"

namespace grasscode {
namespace {

void BM_PdfClosedForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdf_closed_form(m, 20, x));
    x = x < 0.9 ? x + 0.01 : 0.1;
  }
}
BENCHMARK(BM_PdfClosedForm)->DenseRange(1, 3);

void BM_PdfGeneral(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const PdfModel& model = cached_pdf_model(m);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.pdf(4 * m, x));
    x = x < 0.9 ? x + 0.01 : 0.1;
  }
}
BENCHMARK(BM_PdfGeneral)->DenseRange(1, 6);

void BM_PartialFractionSolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partial_fraction_coeffs(m));
}
BENCHMARK(BM_PartialFractionSolve)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_GvMinProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gv_min_product(10, 2, 512));
}
BENCHMARK(BM_GvMinProduct)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace grasscode
