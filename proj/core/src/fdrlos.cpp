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

// FdRLoS closed forms and their conditional-averaging oracles.
//
// Conditioning on x = |G3|^2 turns the model into a Rician shadowed one with
// K_x = K/x and gamma_bar_x = gamma_bar (K + x)/(K + 1). For integer m the
// conditional density is a finite Erlang mixture; averaging it against e^-x
// with t = K/m + x gives, with z = K/m and b = gamma (K + 1)/gamma_bar,
//
//   f(g) = sum_j binom(m-1,j) z^(m-j-1) (K+1) b^(m-j-1) / (gbar (m-j-1)!)
//          * sum_{r=0..j} binom(j,r) (-z)^(j-r) e^z G(r+j-2m+2, z, b)
//
//   F(g) = 1 - sum_j binom(m-1,j) z^(m-j-1) sum_{r=0..m-j-1} b^r / r!
//          * sum_{s=0..j} binom(j,s) (-z)^(j-s) e^z G(s-m-r+2, z, b)
//
// where G is the generalized incomplete gamma function. Each inner binomial
// sum equals int_z^inf (t-z)^j t^(...) e^(z-t) e^(-b/t) dt > 0.

#include "detail.hpp"

#include "fdrlos/analytic.hpp"
#include "fdrlos/errors.hpp"
#include "fdrlos/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace fdrlos::analytic {

namespace {

constexpr double kUnderflow = 1e-300;
// Worst tolerated error from cancellation in the binomial sums: relative for
// densities, relative with an absolute floor for the CDF, which is formed as
// 1 - (sum) and is used down to outage levels.
constexpr double kMaxPdfCancellation = 1e-7;
constexpr double kMaxCdfCancellation = 1e-6;
constexpr double kCdfAbsoluteFloor = 1e-10;

// e^z G(a, z, b) for integer a in [a_min, a_max], evaluated on demand.
class ScaledGammaTable {
public:
    ScaledGammaTable(int a_min, int a_max, double z, double b, const QuadratureConfig& cfg)
        : a_min_(a_min), z_(z), b_(b), cfg_(cfg),
          values_(static_cast<std::size_t>(a_max - a_min + 1)) {}

    double operator()(int a) {
        auto& slot = values_[static_cast<std::size_t>(a - a_min_)];
        if (!slot) slot = specfun::gen_incomplete_gamma_scaled(a, z_, b_, cfg_);
        return *slot;
    }

private:
    int a_min_;
    double z_;
    double b_;
    const QuadratureConfig& cfg_;
    std::vector<std::optional<double>> values_;
};

// binom(j, r) (-z)^(j-r)
double signed_binomial_power(int j, int r, double log_z) {
    const double mag = std::exp(detail::log_binomial(j, r) + (j - r) * log_z);
    return ((j - r) % 2 == 0) ? mag : -mag;
}

void check_cancellation(const char* what, double value, double magnitude, double rel_tol,
                        double max_rel, double abs_floor) {
    const double est = magnitude * rel_tol;
    if (est > std::max(max_rel * std::max(std::abs(value), kUnderflow), abs_floor)) {
        std::ostringstream os;
        os << what << ": binomial cancellation limits accuracy (estimated error " << est
           << " on a value of " << value << "); use the oracle path";
        throw AccuracyError(os.str(), value, est);
    }
}

// Both laws are strictly positive for gamma > 0, so anything below the
// threshold (including an exact 0) is an underflow.
Evaluation finish(double value) {
    value = std::max(value, 0.0);
    if (value < kUnderflow) return {0.0, true};
    return {value, false};
}

double x_upper_cutoff() { return 745.0; }  // e^-x underflows beyond this

}  // namespace

QuadratureConfig closed_form_quadrature() {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-300;
    cfg.max_subdivisions = 1000;
    return cfg;
}

QuadratureConfig oracle_quadrature() {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-300;
    cfg.max_subdivisions = 2000;
    return cfg;
}

Evaluation fdrlos_pdf_eval(double gamma, const FadingParams& params) {
    detail::require_nonnegative(gamma, "gamma");
    const int m = params.integer_m();
    const double k = params.k();
    if (k == 0.0) {
        return finish(fdrlos_pdf_oracle(gamma, params));
    }
    const double gbar = params.gamma_bar();
    const double z = k / m;
    const double b = gamma * (k + 1.0) / gbar;
    const double log_z = std::log(z);
    const double log_b = b > 0.0 ? std::log(b) : 0.0;
    const QuadratureConfig cfg = closed_form_quadrature();
    ScaledGammaTable g(2 - 2 * m, 0, z, b, cfg);

    double sum = 0.0;
    double magnitude = 0.0;
    for (int j = 0; j < m; ++j) {
        const int n = m - j;  // Erlang order
        if (b == 0.0 && n > 1) continue;
        const double log_pref = detail::log_binomial(m - 1, j) +
                                (n - 1) * (log_z + log_b) - detail::lgamma(n) +
                                std::log((k + 1.0) / gbar);
        const double pref = std::exp(log_pref);
        double inner = 0.0;
        double inner_abs = 0.0;
        for (int r = 0; r <= j; ++r) {
            const double term = signed_binomial_power(j, r, log_z) * g(r + j - 2 * m + 2);
            inner += term;
            inner_abs += std::abs(term);
        }
        sum += pref * inner;
        magnitude += pref * inner_abs;
    }
    check_cancellation("fdrlos_pdf", sum, magnitude, cfg.rel_tol, kMaxPdfCancellation, 0.0);
    return finish(sum);
}

double fdrlos_pdf(double gamma, const FadingParams& params) {
    return fdrlos_pdf_eval(gamma, params).value;
}

Evaluation fdrlos_cdf_eval(double gamma, const FadingParams& params, CdfIndexing indexing) {
    detail::require_nonnegative(gamma, "gamma");
    const int m = params.integer_m();
    const double k = params.k();
    if (gamma == 0.0) return {0.0, false};
    if (k == 0.0) {
        return finish(fdrlos_cdf_oracle(gamma, params));
    }
    const double gbar = params.gamma_bar();
    const double z = k / m;
    const double b = gamma * (k + 1.0) / gbar;
    const double log_z = std::log(z);
    const double log_b = std::log(b);
    const QuadratureConfig cfg = closed_form_quadrature();
    ScaledGammaTable g(3 - 2 * m, 1, z, b, cfg);

    double sum = 0.0;
    double magnitude = 0.0;
    for (int j = 0; j < m; ++j) {
        const double log_outer = detail::log_binomial(m - 1, j) + (m - j - 1) * log_z;
        const int s_max = indexing == CdfIndexing::Rederived ? j : std::min(j, m - j - 1);
        for (int r = 0; r <= m - j - 1; ++r) {
            const double pref = std::exp(log_outer + r * log_b - detail::lgamma(r + 1.0));
            double inner = 0.0;
            double inner_abs = 0.0;
            for (int s = 0; s <= s_max; ++s) {
                const double term = signed_binomial_power(j, s, log_z) * g(s - m - r + 2);
                inner += term;
                inner_abs += std::abs(term);
            }
            sum += pref * inner;
            magnitude += pref * inner_abs;
        }
    }
    const double value = 1.0 - sum;
    if (indexing == CdfIndexing::Rederived) {
        check_cancellation("fdrlos_cdf", value, magnitude, cfg.rel_tol, kMaxCdfCancellation,
                           kCdfAbsoluteFloor);
    }
    return finish(std::min(value, 1.0));
}

double fdrlos_cdf(double gamma, const FadingParams& params, CdfIndexing indexing) {
    return fdrlos_cdf_eval(gamma, params, indexing).value;
}

double fdrlos_pdf_oracle(double gamma, const FadingParams& params, const QuadratureConfig& cfg) {
    detail::require_nonnegative(gamma, "gamma");
    const double k = params.k();
    const double m = params.m();
    const double gbar = params.gamma_bar();
    if (k == 0.0 && gamma == 0.0) {
        return std::numeric_limits<double>::infinity();  // logarithmic divergence
    }
    auto f = [&](double x) {
        if (x <= 0.0 || x > x_upper_cutoff()) return 0.0;
        const double k_x = k / x;
        const double gbar_x = gbar * (k + x) / (k + 1.0);
        return rs_pdf(gamma, k_x, m, gbar_x) * std::exp(-x);
    };
    const std::array<double, 6> pts{0.0, 1e-2, 1e-1, 1.0, 4.0, specfun::kInfinity};
    return specfun::adaptive_quad(f, pts, cfg).value;
}

double fdrlos_cdf_oracle(double gamma, const FadingParams& params, const QuadratureConfig& cfg) {
    detail::require_nonnegative(gamma, "gamma");
    if (gamma == 0.0) return 0.0;
    const double k = params.k();
    const double m = params.m();
    const double gbar = params.gamma_bar();
    const bool integer_m = params.has_integer_m();
    QuadratureConfig inner_cfg = cfg;
    inner_cfg.rel_tol = std::max(cfg.rel_tol * 0.1, 1e-14);
    auto f = [&](double x) {
        if (x <= 0.0 || x > x_upper_cutoff()) return 0.0;
        const double k_x = k / x;
        const double gbar_x = gbar * (k + x) / (k + 1.0);
        const double cond = integer_m ? rs_cdf_integer(gamma, k_x, params.integer_m(), gbar_x)
                                      : rs_cdf(gamma, k_x, m, gbar_x, inner_cfg);
        return cond * std::exp(-x);
    };
    const std::array<double, 6> pts{0.0, 1e-2, 1e-1, 1.0, 4.0, specfun::kInfinity};
    const double value = specfun::adaptive_quad(f, pts, cfg).value;
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace fdrlos::analytic
