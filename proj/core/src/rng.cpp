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

#include "fdrlos/rng.hpp"

#include "fdrlos/errors.hpp"

#include <cmath>
#include <numbers>

namespace fdrlos {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(stream_key(seed, stream)) {}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> RngStream::complex_gaussian() {
    // each quadrature component has variance 1/2
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::complex<double> RngStream::unit_phasor() {
    const double phi = 2.0 * std::numbers::pi * uniform();
    return {std::cos(phi), std::sin(phi)};
}

double RngStream::standard_gamma(double shape) {
    if (shape < 1.0) {
        // G(a) = G(a + 1) * U^(1/a)
        const double g = standard_gamma(shape + 1.0);
        return g * std::pow(uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double RngStream::gamma_unit_mean(double m) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("gamma_unit_mean: shape m must be finite and > 0");
    }
    return standard_gamma(m) / m;
}

std::vector<double> sample_gamma_rv(double m, std::size_t n, RngStream& stream) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("sample_gamma_rv: shape m must be finite and > 0");
    }
    if (n == 0) {
        throw DomainError("sample_gamma_rv: n must be >= 1");
    }
    std::vector<double> out(n);
    for (double& v : out) v = stream.gamma_unit_mean(m);
    return out;
}

}  // namespace fdrlos
