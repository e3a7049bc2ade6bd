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

#include "fdrlos/specfun.hpp"

#include "fdrlos/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>

namespace fdrlos::specfun {

namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr double kAsymptoticThreshold = 50.0;
constexpr std::size_t kMaxSeriesTerms = 2'000'000;

bool is_nonpositive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

double lgamma_abs(double v) { return boost::math::lgamma(v); }

int gamma_sign(double v) {
    if (v > 0.0) return 1;
    return (static_cast<long long>(std::floor(v)) % 2 == 0) ? 1 : -1;
}

// 1F1 = mantissa * exp(log_scale) * exp(shift). `shift` is either 0 or x and
// is kept apart so that e^(-x) 1F1 never subtracts two large exponents.
struct Scaled {
    double mantissa;
    double log_scale;
    double shift;
};

// Ascending series sum_k (a)_k / (b)_k x^k / k!, renormalized against overflow.
Scaled ascending_series(double a, double b, double x) {
    double term = 1.0;
    double sum = 1.0;
    double log_scale = 0.0;
    double max_term = 1.0;
    constexpr double kRescale = 1e250;
    for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
        const double kk = static_cast<double>(k);
        if (a + kk == 0.0) {
            break;  // terminating series
        }
        const double ratio = (a + kk) / (b + kk) * x / (kk + 1.0);
        term *= ratio;
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        if (std::abs(sum) > kRescale) {
            sum /= kRescale;
            term /= kRescale;
            max_term /= kRescale;
            log_scale += 250.0 * kLn10;
        }
        if (std::abs(term) <= 1e-17 * std::abs(sum) && std::abs(ratio) < 1.0) {
            if (max_term > 1e8 * std::abs(sum)) {
                throw AccuracyError("kummer_1f1: cancellation in ascending series",
                                    sum * std::exp(log_scale), max_term * std::exp(log_scale));
            }
            return Scaled{sum, log_scale, 0.0};
        }
    }
    if (max_term > 1e8 * std::abs(sum)) {
        throw AccuracyError("kummer_1f1: cancellation in ascending series",
                            sum * std::exp(log_scale), max_term * std::exp(log_scale));
    }
    if (is_nonpositive_integer(a)) {
        return Scaled{sum, log_scale, 0.0};
    }
    throw AccuracyError("kummer_1f1: ascending series did not converge", sum * std::exp(log_scale),
                        std::abs(term) * std::exp(log_scale));
}

// Large-x expansion 1F1 ~ Gamma(b)/Gamma(a) e^x x^(a-b) sum_k (b-a)_k (1-a)_k / (k! x^k).
// Returns nullopt when the divergent tail is reached before convergence.
std::optional<Scaled> asymptotic_series(double a, double b, double x) {
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 0; k < 1000; ++k) {
        const double kk = k;
        term *= (b - a + kk) * (1.0 - a + kk) / ((kk + 1.0) * x);
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            const double log_scale = (a - b) * std::log(x) + lgamma_abs(b) - lgamma_abs(a);
            const int sign = gamma_sign(b) * gamma_sign(a);
            return Scaled{sign * sum, log_scale, x};
        }
        if (std::abs(term) > std::abs(prev) && k > 0) {
            return std::nullopt;
        }
        sum += term;
        prev = term;
        if (term == 0.0) {
            const double log_scale = (a - b) * std::log(x) + lgamma_abs(b) - lgamma_abs(a);
            return Scaled{gamma_sign(b) * gamma_sign(a) * sum, log_scale, x};
        }
    }
    return std::nullopt;
}

Scaled kummer_scaled_impl(double a, double b, double x) {
    if (std::isnan(a) || std::isnan(b) || std::isnan(x) || std::isinf(x)) {
        throw DomainError("kummer_1f1: arguments must be finite");
    }
    if (is_nonpositive_integer(b)) {
        std::ostringstream os;
        os << "kummer_1f1: b = " << b << " is a nonpositive integer";
        throw DomainError(os.str());
    }
    if (x == 0.0 || a == 0.0) {
        return Scaled{1.0, 0.0, 0.0};
    }
    if (x < 0.0) {
        // Kummer transformation 1F1(a;b;x) = e^x 1F1(b-a;b;-x).
        Scaled s = kummer_scaled_impl(b - a, b, -x);
        s.log_scale += s.shift;  // shift belonged to -x; fold it back
        s.shift = x;
        return s;
    }
    if (is_nonpositive_integer(a) || x <= kAsymptoticThreshold) {
        return ascending_series(a, b, x);
    }
    if (is_nonpositive_integer(b - a)) {
        // Kummer transformation to a terminating series with positive terms.
        Scaled s = ascending_series(b - a, b, -x);
        s.shift = x;
        return s;
    }
    if (auto s = asymptotic_series(a, b, x)) {
        return *s;
    }
    return ascending_series(a, b, x);
}

void check_gen_gamma_args(double a, double z, double b) {
    if (std::isnan(a) || std::isnan(z) || std::isnan(b) || std::isinf(a) || std::isinf(z) ||
        std::isinf(b)) {
        throw DomainError("gen_incomplete_gamma: arguments must be finite");
    }
    if (z < 0.0) {
        throw DomainError("gen_incomplete_gamma: z must be nonnegative");
    }
    if (z == 0.0 && a <= 0.0) {
        throw DomainError("gen_incomplete_gamma: integral diverges for z = 0 and a <= 0");
    }
    if (b < 0.0) {
        throw DomainError("gen_incomplete_gamma: b must be nonnegative");
    }
}

}  // namespace

double gen_incomplete_gamma_scaled(double a, double z, double b, const QuadratureConfig& cfg) {
    check_gen_gamma_args(a, z, b);

    // log of the shifted integrand t^(a-1) e^(z-t) e^(-b/t)
    auto log_integrand = [a, z, b](double t) { return (a - 1.0) * std::log(t) - (t - z) - b / t; };

    // Stationary point of the log-integrand on (0, inf).
    const double am1 = a - 1.0;
    const double peak = 0.5 * (am1 + std::sqrt(am1 * am1 + 4.0 * b));

    std::array<double, 3> pts{};
    std::size_t n_pts = 0;
    double log_peak = 0.0;
    QuadratureConfig local = cfg;
    if (peak > z && !(b == 0.0 && am1 <= 0.0)) {
        const double curvature = am1 / (peak * peak) + 2.0 * b / (peak * peak * peak);
        const double width = curvature > 0.0 ? 1.0 / std::sqrt(curvature) : 1.0;
        log_peak = log_integrand(peak);
        pts = {z, peak, kInfinity};
        n_pts = 3;
        local.tail.scale = std::max(1.0, width);
    } else {
        // Monotone decreasing from z: scale the tail by the initial decay length.
        const double slope = (z > 0.0) ? am1 / z - 1.0 + b / (z * z) : -1.0;
        log_peak = (z > 0.0) ? log_integrand(z) : 0.0;
        pts = {z, kInfinity, 0.0};
        n_pts = 2;
        local.tail.scale = std::clamp(1.0 / std::max(std::abs(slope), 1e-300), 1e-300, 1e3);
    }
    if (z == 0.0) {
        log_peak = std::max(log_peak, 0.0);
    }

    auto f = [&](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(log_integrand(t) - log_peak);
    };
    const QuadResult r = adaptive_quad(f, std::span<const double>(pts.data(), n_pts), local);
    const double value = r.value * std::exp(log_peak);
    if (std::isinf(value)) {
        throw AccuracyError("gen_incomplete_gamma: result overflows double precision", value,
                            r.err_estimate);
    }
    return value;
}

double gen_incomplete_gamma(double a, double z, double b, const QuadratureConfig& cfg) {
    return std::exp(-z) * gen_incomplete_gamma_scaled(a, z, b, cfg);
}

double kummer_1f1(double a, double b, double x) {
    const Scaled s = kummer_scaled_impl(a, b, x);
    const double value = s.mantissa * std::exp(s.log_scale + s.shift);
    if (std::isinf(value)) {
        throw AccuracyError("kummer_1f1: result overflows double precision", value, 0.0);
    }
    return value;
}

double kummer_1f1_scaled(double a, double b, double x) {
    const Scaled s = kummer_scaled_impl(a, b, x);
    return s.mantissa * std::exp(s.log_scale + (s.shift - x));
}

double log_kummer_1f1_scaled(double a, double b, double x) {
    if (!(a >= 0.0) || !(b > 0.0) || !(x >= 0.0)) {
        throw DomainError("log_kummer_1f1_scaled: requires a >= 0, b > 0, x >= 0");
    }
    const Scaled s = kummer_scaled_impl(a, b, x);
    return std::log(s.mantissa) + s.log_scale + (s.shift - x);
}

double tricomi_u_scaled(int m, double x, const QuadratureConfig& cfg) {
    if (m < 1) {
        throw DomainError("tricomi_u: m must be a positive integer");
    }
    if (!(x > 0.0) || std::isinf(x)) {
        std::ostringstream os;
        os << "tricomi_u: U(m,1,x) diverges for x = " << x << " (x must be > 0)";
        throw DomainError(os.str());
    }
    const double md = m;
    auto log_integrand = [md, x](double t) {
        return -x * t + (md - 1.0) * std::log(t) - md * std::log1p(t);
    };
    // Rough location of the bulk: (m-1)/x when that is small, sqrt(m/x) otherwise.
    const double scale =
        std::min(std::max(md - 1.0, 1.0) / x, std::max(std::sqrt(md / x), 1.0 / x));
    const double log_ref = (m == 1) ? 0.0 : log_integrand(scale);
    QuadratureConfig local = cfg;
    local.tail.scale = scale;
    const std::array<double, 3> pts{0.0, scale, kInfinity};
    auto f = [&](double t) {
        if (t <= 0.0) return (m == 1) ? 1.0 : 0.0;
        return std::exp(log_integrand(t) - log_ref);
    };
    const QuadResult r = adaptive_quad(f, pts, local);
    return r.value * std::exp(log_ref);
}

double tricomi_u(int m, double x, const QuadratureConfig& cfg) {
    const double scaled = tricomi_u_scaled(m, x, cfg);
    return std::exp(std::log(scaled) - lgamma_abs(static_cast<double>(m)));
}

}  // namespace fdrlos::specfun
