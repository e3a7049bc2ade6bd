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
#include <cmath>
#include <vector>

namespace fdrlos::analytic {

namespace {

void require_integer_m(int m) {
    if (m < 1) throw DomainError("Rician shadowed closed forms need integer m >= 1");
}

// Binomial(m-1, p) weights for j = 0..m-1 given log p and log q (q = 1 - p).
std::vector<double> binomial_weights(int m, double log_p, double log_q, bool q_is_zero) {
    std::vector<double> c(static_cast<std::size_t>(m), 0.0);
    if (q_is_zero) {
        c.back() = 1.0;  // 0^0 = 1: only j = m-1 survives
        return c;
    }
    for (int j = 0; j < m; ++j) {
        const double lc = detail::log_binomial(m - 1, j) + j * log_p + (m - 1 - j) * log_q;
        c[static_cast<std::size_t>(j)] = std::exp(lc);
    }
    return c;
}

// Regularized lower incomplete gamma P(n, y) for n = 1..m, returned at
// index n-1. P(m, y) comes from the series (or 1 - Q for y > m) and the
// remaining orders follow from the downward recurrence
//     P(n, y) = P(n+1, y) + y^n e^(-y) / n!,
// which only adds positive terms.
std::vector<double> erlang_cdfs(int m, double y) {
    std::vector<double> p(static_cast<std::size_t>(m), 0.0);
    if (y <= 0.0) return p;
    if (std::isinf(y)) {
        std::fill(p.begin(), p.end(), 1.0);
        return p;
    }
    const double md = m;
    const double log_y = std::log(y);
    double top = 0.0;
    if (y < md) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 100000; ++k) {
            term *= y / (md + k);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        top = std::exp(md * log_y - y - detail::lgamma(md + 1.0)) * sum;
    } else {
        double q = 0.0;
        double log_term = -y;  // r = 0
        for (int r = 0; r < m; ++r) {
            if (r > 0) log_term += log_y - std::log(static_cast<double>(r));
            q += std::exp(log_term);
        }
        top = 1.0 - q;
    }
    p.back() = std::clamp(top, 0.0, 1.0);
    // log of y^n e^-y / n! for n = m-1, walking down.
    double log_term = (md - 1.0) * log_y - y - detail::lgamma(md);
    for (int n = m - 1; n >= 1; --n) {
        p[static_cast<std::size_t>(n - 1)] =
            std::min(1.0, p[static_cast<std::size_t>(n)] + std::exp(log_term));
        log_term += std::log(static_cast<double>(n)) - log_y;
    }
    return p;
}

}  // namespace

double RsMixtureTerms::pdf(double gamma) const {
    detail::require_nonnegative(gamma, "gamma");
    const int mm = m();
    if (gamma == 0.0) return coefficients.back() / omega;
    const double y = gamma / omega;
    const double log_y = std::log(y);
    double sum = 0.0;
    for (int j = 0; j < mm; ++j) {
        const double cj = coefficients[static_cast<std::size_t>(j)];
        if (cj == 0.0) continue;
        const int n = mm - j;
        sum += cj * std::exp((n - 1) * log_y - y - detail::lgamma(static_cast<double>(n)));
    }
    return sum / omega;
}

double RsMixtureTerms::cdf(double gamma) const {
    detail::require_nonnegative(gamma, "gamma");
    const int mm = m();
    const std::vector<double> p = erlang_cdfs(mm, gamma / omega);
    double sum = 0.0;
    for (int j = 0; j < mm; ++j) {
        sum += coefficients[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(mm - j - 1)];
    }
    return std::clamp(sum, 0.0, 1.0);
}

RsMixtureTerms rs_mixture_terms(double k_x, int m, double gamma_bar_x) {
    require_integer_m(m);
    detail::require_nonnegative(k_x, "k_x");
    detail::require_positive(gamma_bar_x, "gamma_bar_x");
    const double md = m;
    const double log_p = -std::log1p(k_x / md);
    const double log_q = k_x > 0.0 ? -std::log1p(md / k_x) : 0.0;
    RsMixtureTerms t;
    t.coefficients = binomial_weights(m, log_p, log_q, k_x == 0.0);
    t.omega = gamma_bar_x * (k_x + md) / (md * (1.0 + k_x));
    return t;
}

RsMixtureTerms rs_pdf_integer_terms(double x, double k, int m, double gamma_bar) {
    require_integer_m(m);
    detail::require_positive(x, "x");
    detail::require_nonnegative(k, "K");
    detail::require_positive(gamma_bar, "gamma_bar");
    const double md = m;
    const double mx = md * x;
    const double log_p = k > 0.0 ? -std::log1p(k / mx) : 0.0;
    const double log_q = k > 0.0 ? -std::log1p(mx / k) : 0.0;
    RsMixtureTerms t;
    t.coefficients = binomial_weights(m, log_p, log_q, k == 0.0);
    t.omega = gamma_bar * (k + mx) / (md * (k + 1.0));
    return t;
}

double rs_pdf(double gamma, double k_x, double m, double gamma_bar_x) {
    detail::require_nonnegative(gamma, "gamma");
    detail::require_nonnegative(k_x, "k_x");
    detail::require_positive(m, "m");
    detail::require_positive(gamma_bar_x, "gamma_bar_x");
    // m^m (1+K)/((m+K)^m gbar) e^(-(1+K) g/gbar) 1F1(m; 1; X),  X = K/(K+m) (1+K) g/gbar,
    // evaluated as exp(log prefactor - (1+K) g/gbar * m/(K+m) + log(e^-X 1F1)).
    const double a = (1.0 + k_x) * gamma / gamma_bar_x;
    const double x_arg = k_x / (k_x + m) * a;
    const double log_pref = -m * std::log1p(k_x / m) + std::log1p(k_x) - std::log(gamma_bar_x);
    const double log_f =
        log_pref - a * m / (k_x + m) + specfun::log_kummer_1f1_scaled(m, 1.0, x_arg);
    return std::exp(log_f);
}

double rs_pdf_integer(double gamma, double k_x, int m, double gamma_bar_x) {
    return rs_mixture_terms(k_x, m, gamma_bar_x).pdf(gamma);
}

double rs_cdf_integer(double gamma, double k_x, int m, double gamma_bar_x) {
    // 1 - sum_j C_j e^(-g/omega) sum_{r<m-j} (g/omega)^r / r!, rewritten with
    // sum_j C_j = 1 as sum_j C_j P(m - j, g/omega) to keep small values accurate.
    detail::require_nonnegative(gamma, "gamma");
    return rs_mixture_terms(k_x, m, gamma_bar_x).cdf(gamma);
}

}  // namespace fdrlos::analytic

namespace fdrlos::detail {

double rs_cdf_quadrature(double gamma, double k_x, double m, double gamma_bar_x,
                         const specfun::QuadratureConfig& cfg) {
    if (gamma == 0.0) return 0.0;
    auto f = [&](double u) { return analytic::rs_pdf(u, k_x, m, gamma_bar_x); };
    // geometric breakpoints from the mean upward, so the mass is resolved
    // even when gamma is many means into the tail
    std::vector<double> pts{0.0};
    for (double t = gamma_bar_x; t < gamma && pts.size() < 64; t *= 4.0) pts.push_back(t);
    pts.push_back(gamma);
    return std::clamp(specfun::adaptive_quad(f, pts, cfg).value, 0.0, 1.0);
}

}  // namespace fdrlos::detail

namespace fdrlos::analytic {

double rs_cdf(double gamma, double k_x, double m, double gamma_bar_x,
              const QuadratureConfig& cfg) {
    detail::require_nonnegative(gamma, "gamma");
    detail::require_positive(m, "m");
    if (std::floor(m) == m && m < 1e6) {
        return rs_cdf_integer(gamma, k_x, static_cast<int>(m), gamma_bar_x);
    }
    return detail::rs_cdf_quadrature(gamma, k_x, m, gamma_bar_x, cfg);
}

double rs_asymptotic_op(double gamma_th, double gamma_bar, double k, double m) {
    detail::require_nonnegative(gamma_th, "gamma_th");
    detail::require_positive(gamma_bar, "gamma_bar");
    detail::require_nonnegative(k, "K");
    detail::require_positive(m, "m");
    return gamma_th / gamma_bar * (1.0 + k) * std::exp(-m * std::log1p(k / m));
}

}  // namespace fdrlos::analytic
