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

#ifndef FDRLOS_RNG_HPP
#define FDRLOS_RNG_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace fdrlos {

/// splitmix64 finalizer over (seed, stream); used to derive independent,
/// partition-free substreams.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept;

/// A reproducible random stream. The engine (mt19937_64) has a sequence fixed
/// by the C++ standard, and every variate transform below is implemented here
/// rather than through <random> distributions, whose output is
/// implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1].
    double uniform_open() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal (Box-Muller, one spare cached).
    double normal();
    /// Circularly-symmetric complex Gaussian with E|G|^2 = 1.
    std::complex<double> complex_gaussian();
    /// Unit-modulus phasor with phase uniform on [0, 2 pi).
    std::complex<double> unit_phasor();
    /// Gamma with shape m and scale 1/m (unit mean): Marsaglia-Tsang squeeze
    /// rejection, with the U^(1/m) boost for m < 1.
    double gamma_unit_mean(double m);

private:
    double standard_gamma(double shape);

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// n draws of the unit-mean Gamma(m, 1/m) law from `stream`.
/// Throws DomainError for m <= 0 or n == 0.
std::vector<double> sample_gamma_rv(double m, std::size_t n, RngStream& stream);

}  // namespace fdrlos

#endif  // FDRLOS_RNG_HPP
