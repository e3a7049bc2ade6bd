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

#include "fdrlos/params.hpp"

#include "fdrlos/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fdrlos {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Rician: return "rician";
        case ModelKind::RicianShadowed: return "rs";
        case ModelKind::DRLoS: return "drlos";
        case ModelKind::FdRLoS: return "fdrlos";
    }
    return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
    if (name == "rician" || name == "rice") return ModelKind::Rician;
    if (name == "rs" || name == "rician-shadowed") return ModelKind::RicianShadowed;
    if (name == "drlos") return ModelKind::DRLoS;
    if (name == "fdrlos") return ModelKind::FdRLoS;
    return std::nullopt;
}

FadingParams::FadingParams(double k, double m, double gamma_bar)
    : k_(k), m_(m), gamma_bar_(gamma_bar) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw DomainError("FadingParams: K must be finite and >= 0");
    }
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("FadingParams: m must be finite and > 0");
    }
    if (!(gamma_bar > 0.0) || !std::isfinite(gamma_bar)) {
        throw DomainError("FadingParams: gamma_bar must be finite and > 0");
    }
}

bool FadingParams::has_integer_m() const noexcept {
    return std::floor(m_) == m_ && m_ <= static_cast<double>(std::numeric_limits<int>::max());
}

int FadingParams::integer_m() const {
    if (!has_integer_m()) {
        std::ostringstream os;
        os << "m = " << m_
           << " is not a positive integer; closed forms need integer m, use the oracle path";
        throw DomainError(os.str());
    }
    return static_cast<int>(m_);
}

std::string describe(const FadingParams& params) {
    std::ostringstream os;
    os.precision(17);
    os << "K=" << params.k() << " m=" << params.m() << " gamma_bar=" << params.gamma_bar();
    return os.str();
}

}  // namespace fdrlos
