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

#ifndef FDRLOS_PARAMS_HPP
#define FDRLOS_PARAMS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace fdrlos {

/// The four line-of-sight fading models. Rician and RicianShadowed carry a
/// single Gaussian diffuse term; DRLoS and FdRLoS carry the product of two.
enum class ModelKind { Rician, RicianShadowed, DRLoS, FdRLoS };

std::string_view to_string(ModelKind kind);
/// Accepts "rician", "rs" / "rician-shadowed", "drlos", "fdrlos".
std::optional<ModelKind> parse_model_kind(std::string_view name);

/// True for the models whose LoS amplitude fluctuates with a Gamma law.
constexpr bool has_los_fluctuation(ModelKind kind) {
    return kind == ModelKind::RicianShadowed || kind == ModelKind::FdRLoS;
}

/// (K, m, average SNR) shared by every model. The channel is normalized to
/// unit power, so the LoS and diffuse powers are K/(K+1) and 1/(K+1) and all
/// power scaling is carried by gamma_bar (linear).
class FadingParams {
public:
    /// Throws DomainError unless K >= 0, m > 0 and gamma_bar > 0 (all finite).
    FadingParams(double k, double m, double gamma_bar);

    double k() const noexcept { return k_; }
    double m() const noexcept { return m_; }
    double gamma_bar() const noexcept { return gamma_bar_; }

    /// omega_0^2
    double los_power() const noexcept { return k_ / (k_ + 1.0); }
    /// omega_2^2 (omega_1^2 for the single-Gaussian models)
    double diffuse_power() const noexcept { return 1.0 / (k_ + 1.0); }

    bool has_integer_m() const noexcept;
    /// m as an integer; throws DomainError when m is not a positive integer.
    int integer_m() const;

    FadingParams with_gamma_bar(double gamma_bar) const { return {k_, m_, gamma_bar}; }
    FadingParams with_k(double k) const { return {k, m_, gamma_bar_}; }
    FadingParams with_m(double m) const { return {k_, m, gamma_bar_}; }

    friend bool operator==(const FadingParams&, const FadingParams&) = default;

private:
    double k_;
    double m_;
    double gamma_bar_;
};

std::string describe(const FadingParams& params);

}  // namespace fdrlos

#endif  // FDRLOS_PARAMS_HPP
