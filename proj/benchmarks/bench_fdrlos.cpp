// SPDX-License-Identifier: Apache-2.0
//
// fdrlos: fluctuating double-Rayleigh line-of-sight fading library
// Copyright (C) 2026 The fdrlos contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "fdrlos/analytic.hpp"
#include "fdrlos/models.hpp"
#include "fdrlos/specfun.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fdrlos;
using namespace fdrlos::analytic;

void BM_GenIncompleteGamma(benchmark::State& state) {
    const auto cfg = closed_form_quadrature();
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::gen_incomplete_gamma_scaled(-3.0, 1.5, 2.0, cfg));
    }
}
BENCHMARK(BM_GenIncompleteGamma);

void BM_ClosedFormPdf(benchmark::State& state) {
    const FadingParams p(5.0, static_cast<double>(state.range(0)), 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(fdrlos_pdf(1.3, p));
}
BENCHMARK(BM_ClosedFormPdf)->Arg(1)->Arg(3)->Arg(8);

void BM_OraclePdf(benchmark::State& state) {
    const FadingParams p(5.0, static_cast<double>(state.range(0)), 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(fdrlos_pdf_oracle(1.3, p));
}
BENCHMARK(BM_OraclePdf)->Arg(1)->Arg(3)->Arg(8);

void BM_ClosedFormCdf(benchmark::State& state) {
    const FadingParams p(5.0, static_cast<double>(state.range(0)), 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(fdrlos_cdf(1.3, p));
}
BENCHMARK(BM_ClosedFormCdf)->Arg(1)->Arg(3)->Arg(8);

void BM_OracleCdf(benchmark::State& state) {
    const FadingParams p(5.0, static_cast<double>(state.range(0)), 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(fdrlos_cdf_oracle(1.3, p));
}
BENCHMARK(BM_OracleCdf)->Arg(1)->Arg(3)->Arg(8);

void BM_CodingGain(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(coding_gain(1.0, 3));
}
BENCHMARK(BM_CodingGain);

void BM_SampleSnr(benchmark::State& state) {
    const FadingParams p(5.0, 3.0, 2.0);
    SamplerOptions opt;
    opt.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_snr(ModelKind::FdRLoS, p, 100'000, 7, opt));
    }
    state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_SampleSnr)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
