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

#include "fdrlos/models.hpp"

#include "fdrlos/errors.hpp"
#include "fdrlos/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <mutex>
#include <thread>

namespace fdrlos {

namespace {

template <typename ChunkFn>
void fill_chunked(std::vector<double>& out, std::uint64_t seed, unsigned threads,
                  const ChunkFn& fn) {
    const std::size_t n = out.size();
    const std::size_t n_chunks = (n + kSampleChunk - 1) / kSampleChunk;
    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_chunks));

    auto run_chunk = [&](std::size_t c) {
        RngStream stream(seed, c);
        const std::size_t begin = c * kSampleChunk;
        const std::size_t end = std::min(n, begin + kSampleChunk);
        fn(stream, std::span<double>(out.data() + begin, end - begin));
    };

    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t c = next++; c < n_chunks; c = next++) run_chunk(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

SnrSampleSet sample_snr(ModelKind model, const FadingParams& params, std::size_t n,
                        std::uint64_t seed, const SamplerOptions& options) {
    if (n == 0) {
        throw DomainError("sample_snr: sample count must be >= 1");
    }
    SnrSampleSet set{model, params, seed, std::vector<double>(n)};

    const double w0 = std::sqrt(params.los_power());
    const double wd = std::sqrt(params.diffuse_power());
    const double m = params.m();
    const double gamma_bar = params.gamma_bar();
    const std::complex<double> rotation = std::polar(1.0, options.los_phase_offset);
    const bool fluctuating = has_los_fluctuation(model);
    const bool double_scatter = model == ModelKind::DRLoS || model == ModelKind::FdRLoS;

    fill_chunked(set.values, seed, options.threads, [&](RngStream& rng, std::span<double> dst) {
        for (double& v : dst) {
            const double xi = fluctuating ? rng.gamma_unit_mean(m) : 1.0;
            const std::complex<double> los = w0 * std::sqrt(xi) * rng.unit_phasor() * rotation;
            std::complex<double> diffuse = rng.complex_gaussian();
            if (double_scatter) diffuse *= rng.complex_gaussian();
            v = gamma_bar * std::norm(los + wd * diffuse);
        }
    });
    return set;
}

std::vector<double> sample_fdrlos_conditional(const FadingParams& params, double x,
                                              std::size_t n, std::uint64_t seed,
                                              const SamplerOptions& options) {
    if (n == 0) {
        throw DomainError("sample_fdrlos_conditional: sample count must be >= 1");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("sample_fdrlos_conditional: x = |G3|^2 must be finite and > 0");
    }
    std::vector<double> out(n);
    const double w0 = std::sqrt(params.los_power());
    const double wd = std::sqrt(params.diffuse_power());
    const double g3_mag = std::sqrt(x);
    const double m = params.m();
    const double gamma_bar = params.gamma_bar();
    const std::complex<double> rotation = std::polar(1.0, options.los_phase_offset);

    fill_chunked(out, seed, options.threads, [&](RngStream& rng, std::span<double> dst) {
        for (double& v : dst) {
            const double xi = rng.gamma_unit_mean(m);
            const std::complex<double> los = w0 * std::sqrt(xi) * rng.unit_phasor() * rotation;
            const std::complex<double> g3 = g3_mag * rng.unit_phasor();
            v = gamma_bar * std::norm(los + wd * rng.complex_gaussian() * g3);
        }
    });
    return out;
}

}  // namespace fdrlos
