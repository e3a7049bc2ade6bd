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

#ifndef FDRLOS_MODELS_HPP
#define FDRLOS_MODELS_HPP

#include "fdrlos/params.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fdrlos {

/// Samples are drawn in chunks of this size; chunk c always uses the
/// substream stream_key(seed, c), whatever the thread count.
inline constexpr std::size_t kSampleChunk = std::size_t{1} << 16;

/// Seeded Monte-Carlo SNR realizations (linear scale) with their provenance.
struct SnrSampleSet {
    ModelKind model;
    FadingParams params;
    std::uint64_t seed;
    std::vector<double> values;

    std::size_t count() const noexcept { return values.size(); }
    std::span<const double> view() const noexcept { return values; }
};

struct SamplerOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Fixed rotation applied to the LoS phasor (radians). The SNR law does
    /// not depend on it.
    double los_phase_offset = 0.0;
};

/// gamma = gamma_bar |S|^2 for the physical signal model of `model`:
///   Rician          S = w0 e^{j phi} + w1 G1
///   RicianShadowed  S = w0 sqrt(xi) e^{j phi} + w1 G1
///   DRLoS           S = w0 e^{j phi} + w2 G2 G3
///   FdRLoS          S = w0 sqrt(xi) e^{j phi} + w2 G2 G3
/// with xi ~ Gamma(m, 1/m) (xi = 1 for the deterministic-LoS models).
/// Output is a pure function of (model, params, n, seed).
/// Throws DomainError for n == 0.
SnrSampleSet sample_snr(ModelKind model, const FadingParams& params, std::size_t n,
                        std::uint64_t seed, const SamplerOptions& options = {});

/// FdRLoS samples with |G3|^2 held at `x` (the conditional law of the model
/// given the second scattering gain). Throws DomainError for x <= 0 or n == 0.
std::vector<double> sample_fdrlos_conditional(const FadingParams& params, double x,
                                              std::size_t n, std::uint64_t seed,
                                              const SamplerOptions& options = {});

}  // namespace fdrlos

#endif  // FDRLOS_MODELS_HPP
