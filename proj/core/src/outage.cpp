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


#include "detail.hpp"

#include "fdrlos/analytic.hpp"
#include "fdrlos/errors.hpp"
#include "fdrlos/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fdrlos::analytic {

namespace {

double rs_cdf_by_quadrature(double gamma, const FadingParams& p) {
    return detail::rs_cdf_quadrature(gamma, p.k(), p.m(), p.gamma_bar(), oracle_quadrature());
}

[[noreturn]] void no_closed_form(ModelKind model) {
    throw DomainError(std::string("no closed form is implemented for model ") +
                      std::string(to_string(model)) + "; use the oracle path");
}

// Closed form first; the oracle takes over for non-integer m, and where the
// closed form reports that cancellation limits its accuracy.
template <typename Closed, typename Oracle>
double closed_or_oracle(EvalPath path, const FadingParams& params, Closed closed, Oracle oracle) {
    switch (path) {
    case EvalPath::ClosedForm:
        return closed();
    case EvalPath::Oracle:
        return oracle();
    case EvalPath::Auto:
        break;
    }
    if (!params.has_integer_m()) return oracle();
    try {
        return closed();
    } catch (const AccuracyError&) {
        return oracle();
    }
}

}  // namespace

double outage_probability(double gamma_th, const FadingParams& params) {
    return model_cdf(ModelKind::FdRLoS, gamma_th, params, EvalPath::Auto);
}

double coding_gain(double k, int m, const QuadratureConfig& cfg) {
    if (!(k >= 0.0) || std::isinf(k)) throw DomainError("coding_gain: K must be finite and > 0");
    if (m < 1) throw DomainError("coding_gain: m must be an integer >= 1");
    if (k == 0.0) {
        throw DivergenceError(
            "coding_gain: U(m, 1, K/m) diverges as K -> 0; the high-SNR asymptote is undefined "
            "for K = 0");
    }
    return (1.0 + k) * specfun::tricomi_u_scaled(m, k / m, cfg);
}

double asymptotic_op(double gamma_th, double gamma_bar, double k, int m) {
    detail::require_nonnegative(gamma_th, "gamma_th");
    detail::require_positive(gamma_bar, "gamma_bar");
    return coding_gain(k, m) * gamma_th / gamma_bar;
}

double model_pdf(ModelKind model, double gamma, const FadingParams& params, EvalPath path) {
    switch (model) {
    case ModelKind::Rician:
        return rician_pdf(gamma, params.k(), params.gamma_bar());
    case ModelKind::RicianShadowed:
        if (path == EvalPath::ClosedForm) {
            return rs_pdf_integer(gamma, params.k(), params.integer_m(), params.gamma_bar());
        }
        return rs_pdf(gamma, params.k(), params.m(), params.gamma_bar());
    case ModelKind::DRLoS:
        if (path == EvalPath::ClosedForm) no_closed_form(model);
        return drlos_pdf_oracle(gamma, params.k(), params.gamma_bar());
    case ModelKind::FdRLoS:
        return closed_or_oracle(
            path, params, [&] { return fdrlos_pdf(gamma, params); },
            [&] { return fdrlos_pdf_oracle(gamma, params); });
    }
    throw DomainError("model_pdf: unknown model");
}

double model_cdf(ModelKind model, double gamma, const FadingParams& params, EvalPath path) {
    switch (model) {
    case ModelKind::Rician:
        return rician_cdf(gamma, params.k(), params.gamma_bar());
    case ModelKind::RicianShadowed:
        if (path == EvalPath::Oracle) return rs_cdf_by_quadrature(gamma, params);
        if (path == EvalPath::ClosedForm) {
            return rs_cdf_integer(gamma, params.k(), params.integer_m(), params.gamma_bar());
        }
        return rs_cdf(gamma, params.k(), params.m(), params.gamma_bar());
    case ModelKind::DRLoS:
        if (path == EvalPath::ClosedForm) no_closed_form(model);
        return drlos_cdf_oracle(gamma, params.k(), params.gamma_bar());
    case ModelKind::FdRLoS:
        return closed_or_oracle(
            path, params, [&] { return fdrlos_cdf(gamma, params); },
            [&] { return fdrlos_cdf_oracle(gamma, params); });
    }
    throw DomainError("model_cdf: unknown model");
}

}  // namespace fdrlos::analytic
