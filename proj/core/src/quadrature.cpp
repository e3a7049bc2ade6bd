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

#include "fdrlos/quadrature.hpp"

#include "fdrlos/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace fdrlos::specfun {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600633463460, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// One panel of the (possibly transformed) integration range.
struct Segment {
    double lo;
    double hi;
    bool mapped;   // [lo, hi) in the u-variable of a semi-infinite piece
    double origin; // start of the semi-infinite piece in t
};

struct Panel {
    Segment seg;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

class Evaluator {
public:
    Evaluator(const Integrand& f, double tail_scale) : f_(f), scale_(tail_scale) {}

    double operator()(const Segment& s, double u) {
        ++count_;
        double t = u;
        double jac = 1.0;
        if (s.mapped) {
            const double w = 1.0 - u;
            t = s.origin + scale_ * u / w;
            jac = scale_ / (w * w);
        }
        const double y = f_(t);
        if (std::isnan(y)) {
            std::ostringstream os;
            os << "integrand returned NaN at t = " << t;
            throw DomainError(os.str());
        }
        if (y == 0.0) return 0.0;
        if (!std::isfinite(y)) {
            std::ostringstream os;
            os << "integrand is not finite at t = " << t;
            throw DomainError(os.str());
        }
        return y * jac;
    }

    std::size_t count() const { return count_; }

private:
    const Integrand& f_;
    double scale_;
    std::size_t count_ = 0;
};

Panel gauss_kronrod(Evaluator& eval, const Segment& s) {
    const double center = 0.5 * (s.lo + s.hi);
    const double half = 0.5 * (s.hi - s.lo);
    const double abs_half = std::abs(half);

    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    const double fc = eval(s, center);
    double resg = 0.0;
    double resk = kWgk[10] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[jtw];
        f1[jtw] = eval(s, center - dx);
        f2[jtw] = eval(s, center + dx);
        const double sum = f1[jtw] + f2[jtw];
        resg += kWg[j] * sum;
        resk += kWgk[jtw] * sum;
        resabs += kWgk[jtw] * (std::abs(f1[jtw]) + std::abs(f2[jtw]));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[jtwm1];
        f1[jtwm1] = eval(s, center - dx);
        f2[jtwm1] = eval(s, center + dx);
        const double sum = f1[jtwm1] + f2[jtwm1];
        resk += kWgk[jtwm1] * sum;
        resabs += kWgk[jtwm1] * (std::abs(f1[jtwm1]) + std::abs(f2[jtwm1]));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
    }

    const double result = resk * half;
    resabs *= abs_half;
    resasc *= abs_half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > kTiny / (50.0 * kEps)) {
        err = std::max(50.0 * kEps * resabs, err);
    }
    return Panel{s, result, err};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be strictly positive");
    }
    if (max_subdivisions < 1) {
        throw DomainError("quadrature needs at least one subdivision");
    }
    if (!(tail.scale > 0.0) || !std::isfinite(tail.scale)) {
        throw DomainError("quadrature tail scale must be positive and finite");
    }
}

QuadratureConfig QuadratureConfig::golden() {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-300;
    cfg.max_subdivisions = 5000;
    return cfg;
}

QuadResult adaptive_quad(const Integrand& f, double lower, double upper,
                         const QuadratureConfig& cfg) {
    const std::array<double, 2> pts{lower, upper};
    return adaptive_quad(f, pts, cfg);
}

QuadResult adaptive_quad(const Integrand& f, std::span<const double> breakpoints,
                         const QuadratureConfig& cfg) {
    cfg.validate();
    if (breakpoints.size() < 2) {
        throw DomainError("adaptive_quad needs at least two breakpoints");
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (std::isnan(a) || std::isnan(b) || !(a < b)) {
            throw DomainError("adaptive_quad breakpoints must be strictly increasing");
        }
        if (std::isinf(a) || (std::isinf(b) && i + 2 != breakpoints.size())) {
            throw DomainError("adaptive_quad supports only an infinite upper limit");
        }
    }

    Evaluator eval(f, cfg.tail.scale);
    std::vector<Panel> heap;
    long double total = 0.0L;
    long double total_err = 0.0L;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        const Segment seg = std::isinf(b) ? Segment{0.0, 1.0, true, a} : Segment{a, b, false, 0.0};
        Panel p = gauss_kronrod(eval, seg);
        total += p.value;
        total_err += p.error;
        heap.push_back(p);
    }
    std::make_heap(heap.begin(), heap.end());

    std::size_t subdivisions = 0;
    auto tolerance = [&] {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(static_cast<double>(total)));
    };
    while (static_cast<double>(total_err) > tolerance()) {
        if (subdivisions >= cfg.max_subdivisions) {
            std::ostringstream os;
            os << "adaptive_quad: no convergence after " << subdivisions
               << " subdivisions (estimate " << static_cast<double>(total) << ", error "
               << static_cast<double>(total_err) << ")";
            throw AccuracyError(os.str(), static_cast<double>(total),
                                static_cast<double>(total_err));
        }
        const Panel worst = heap.front();
        const double mid = 0.5 * (worst.seg.lo + worst.seg.hi);
        if (!(mid > worst.seg.lo && mid < worst.seg.hi)) {
            throw AccuracyError("adaptive_quad: panel too narrow to subdivide further",
                                static_cast<double>(total), static_cast<double>(total_err));
        }
        std::pop_heap(heap.begin(), heap.end());
        heap.pop_back();
        Segment left = worst.seg;
        left.hi = mid;
        Segment right = worst.seg;
        right.lo = mid;
        const Panel pl = gauss_kronrod(eval, left);
        const Panel pr = gauss_kronrod(eval, right);
        total += static_cast<long double>(pl.value) + pr.value - worst.value;
        total_err += static_cast<long double>(pl.error) + pr.error - worst.error;
        heap.push_back(pl);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(pr);
        std::push_heap(heap.begin(), heap.end());
        ++subdivisions;

        // Incremental error bookkeeping drifts; resync now and then.
        if (subdivisions % 64 == 0) {
            total = 0.0L;
            total_err = 0.0L;
            for (const Panel& p : heap) {
                total += p.value;
                total_err += p.error;
            }
        }
    }

    return QuadResult{static_cast<double>(total), static_cast<double>(total_err), eval.count(),
                      subdivisions};
}

}  // namespace fdrlos::specfun
