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

// Rician and dRLoS reference laws. Both are written in the amplitude
// variable r = sqrt(gamma) with LoS amplitude s and diffuse scale sigma^2:
//
//   f_R(r) = (2 r / sigma^2) exp(-(r - s)^2 / sigma^2) I0e(2 r s / sigma^2)
//
// which keeps every factor bounded even when sigma -> 0.

#include "detail.hpp"

#include "fdrlos/analytic.hpp"
#include "fdrlos/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace fdrlos::analytic {

namespace {

// e^-v I0(v), v >= 0
double bessel_i0e(double v) {
    if (v < 500.0) return std::exp(-v) * boost::math::cyl_bessel_i(0, v);
    // Hankel expansion; the terms fall below 1e-17 well before n = 8 here.
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 8; ++n) {
        const double c = 2.0 * n - 1.0;
        term *= c * c / (8.0 * n * v);
        sum += term;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * v);
}

// Density of gamma = r^2 for the amplitude law above.
double rician_snr_density(double gamma, double s, double sigma2) {
    const double r = std::sqrt(gamma);
    const double d = r - s;
    return std::exp(-d * d / sigma2) * bessel_i0e(2.0 * r * s / sigma2) / sigma2;
}

double rician_snr_cdf(double gamma, double s, double sigma2, const QuadratureConfig& cfg) {
    if (gamma <= 0.0) return 0.0;
    const double sigma = std::sqrt(sigma2);
    const double r_max = std::sqrt(gamma);
    // Outside s +- 40 sigma the amplitude density is below e^-1600.
    const double lo = std::max(0.0, s - 40.0 * sigma);
    const double hi = std::min(r_max, s + 40.0 * sigma);
    if (hi <= lo) return r_max <= lo ? 0.0 : 1.0;
    auto f = [&](double r) {
        const double d = r - s;
        return 2.0 * r / sigma2 * std::exp(-d * d / sigma2) * bessel_i0e(2.0 * r * s / sigma2);
    };
    std::vector<double> pts{lo};
    for (double c : {s - 4.0 * sigma, s, s + 4.0 * sigma}) {
        if (c > pts.back() && c < hi) pts.push_back(c);
    }
    pts.push_back(hi);
    return std::clamp(specfun::adaptive_quad(f, pts, cfg).value, 0.0, 1.0);
}

void check_rician_args(double gamma, double k, double gamma_bar) {
    detail::require_nonnegative(gamma, "gamma");
    detail::require_nonnegative(k, "K");
    detail::require_positive(gamma_bar, "gamma_bar");
}

// Outer breakpoints in x for the dRLoS averages: the conditional law at x
// concentrates at s^2 with width ~ sqrt(x), so the integrand in x changes
// on the scale x* = (sqrt(gamma) - s)^2 (K + 1) / gamma_bar.
std::vector<double> drlos_breakpoints(double gamma, double k, double gamma_bar) {
    std::vector<double> pts{0.0, 1e-6, 1e-4, 1e-2, 0.1, 1.0, 4.0, 20.0};
    const double s = std::sqrt(gamma_bar * k / (k + 1.0));
    const double d = std::sqrt(gamma) - s;
    const double x_star = d * d * (k + 1.0) / gamma_bar;
    for (double c : {0.1 * x_star, x_star, 10.0 * x_star}) {
        if (c > 1e-8 && c < 20.0) pts.push_back(c);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double b) { return b - a < 1e-3 * std::max(a, 1e-9); }),
              pts.end());
    pts.push_back(specfun::kInfinity);
    return pts;
}

}  // namespace

double rician_pdf(double gamma, double k, double gamma_bar) {
    check_rician_args(gamma, k, gamma_bar);
    return rician_snr_density(gamma, std::sqrt(gamma_bar * k / (k + 1.0)),
                              gamma_bar / (k + 1.0));
}

double rician_cdf(double gamma, double k, double gamma_bar, const QuadratureConfig& cfg) {
    check_rician_args(gamma, k, gamma_bar);
    return rician_snr_cdf(gamma, std::sqrt(gamma_bar * k / (k + 1.0)), gamma_bar / (k + 1.0),
                          cfg);
}

double drlos_pdf_oracle(double gamma, double k, double gamma_bar, const QuadratureConfig& cfg) {
    check_rician_args(gamma, k, gamma_bar);
    if (k == 0.0 && gamma == 0.0) return std::numeric_limits<double>::infinity();
    const double s = std::sqrt(gamma_bar * k / (k + 1.0));
    const double c = gamma_bar / (k + 1.0);
    auto f = [&](double x) {
        if (x <= 0.0 || x > 745.0) return 0.0;
        return rician_snr_density(gamma, s, c * x) * std::exp(-x);
    };
    const std::vector<double> pts = drlos_breakpoints(gamma, k, gamma_bar);
    return specfun::adaptive_quad(f, pts, cfg).value;
}

double drlos_cdf_oracle(double gamma, double k, double gamma_bar, const QuadratureConfig& cfg) {
    check_rician_args(gamma, k, gamma_bar);
    if (gamma == 0.0) return 0.0;
    const double s = std::sqrt(gamma_bar * k / (k + 1.0));
    const double c = gamma_bar / (k + 1.0);
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::max(0.1 * cfg.rel_tol, 1e-14);
    auto f = [&](double x) {
        if (x <= 0.0 || x > 745.0) return 0.0;
        return rician_snr_cdf(gamma, s, c * x, inner) * std::exp(-x);
    };
    const std::vector<double> pts = drlos_breakpoints(gamma, k, gamma_bar);
    return std::clamp(specfun::adaptive_quad(f, pts, cfg).value, 0.0, 1.0);
}

double drlos_mode(double k, double gamma_bar) {
    detail::require_nonnegative(k, "K");
    detail::require_positive(gamma_bar, "gamma_bar");
    return gamma_bar * k / (k + 1.0);
}

}  // namespace fdrlos::analytic
