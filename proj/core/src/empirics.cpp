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


#include "fdrlos/empirics.hpp"

#include "fdrlos/errors.hpp"

#include <cmath>
// Boost 1.74 pchip.hpp calls unqualified isnan.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fdrlos::empirics {

namespace {

constexpr double kKsScale = 3.0 * 1.36;
// Allowed decrease of the reference CDF between sorted samples (rounding).
constexpr double kMonotoneSlack = 1e-10;

std::vector<double> sorted_copy(std::span<const double> s) {
    if (s.empty()) throw DomainError("empirics: sample set is empty");
    std::vector<double> v(s.begin(), s.end());
    for (double x : v) {
        if (!std::isfinite(x)) throw DomainError("empirics: samples must be finite");
    }
    std::sort(v.begin(), v.end());
    return v;
}

KsReport ks_sorted(const std::vector<double>& x, const CdfFunction& cdf) {
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    double prev = -1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        if (!(f >= prev - kMonotoneSlack)) {
            std::ostringstream os;
            os << "ks_distance: reference CDF is not monotone near " << x[i] << " (" << prev
               << " then " << f << ")";
            throw ContractViolation(os.str());
        }
        prev = std::max(prev, f);
        const double i0 = static_cast<double>(i);
        d = std::max({d, (i0 + 1.0) / n - f, f - i0 / n});
    }
    KsReport r;
    r.statistic = std::clamp(d, 0.0, 1.0);
    r.n = x.size();
    r.threshold = ks_threshold(x.size());
    r.pass = r.statistic < r.threshold;
    return r;
}

}  // namespace

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(sorted_copy(samples)) {}

double EmpiricalCdf::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_threshold(std::size_t n) {
    if (n == 0) throw DomainError("ks_threshold: n must be >= 1");
    return kKsScale / std::sqrt(static_cast<double>(n));
}

KsReport ks_distance(std::span<const double> samples, const CdfFunction& cdf) {
    return ks_sorted(sorted_copy(samples), cdf);
}

KsReport ks_distance(const SnrSampleSet& samples, const CdfFunction& cdf) {
    return ks_distance(samples.view(), cdf);
}

KsReport ks_distance(const EmpiricalCdf& ecdf, const CdfFunction& cdf) {
    return ks_sorted(ecdf.sorted(), cdf);
}

KsReport ks_two_sample(std::span<const double> a, std::span<const double> b) {
    const std::vector<double> x = sorted_copy(a);
    const std::vector<double> y = sorted_copy(b);
    const double na = static_cast<double>(x.size());
    const double nb = static_cast<double>(y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= v) ++i;
        while (j < y.size() && y[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KsReport r;
    r.statistic = d;
    r.n = x.size() + y.size();
    r.threshold = kKsScale * std::sqrt((na + nb) / (na * nb));
    r.pass = r.statistic < r.threshold;
    return r;
}

struct TabulatedCdf::Table {
    CdfFunction exact;
    double gamma_max;
    boost::math::interpolators::pchip<std::vector<double>> spline;
};

TabulatedCdf::TabulatedCdf(const CdfFunction& cdf, double gamma_max, std::size_t nodes) {
    if (!(gamma_max > 0.0) || !std::isfinite(gamma_max) || nodes < 4) {
        throw DomainError("TabulatedCdf: need finite gamma_max > 0 and at least 4 nodes");
    }
    const double r_max = std::sqrt(gamma_max);
    std::vector<double> r(nodes);
    std::vector<double> f(nodes);
    double running = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        r[i] = r_max * static_cast<double>(i) / static_cast<double>(nodes - 1);
        const double v = i == 0 ? cdf(0.0) : cdf(r[i] * r[i]);
        running = std::max(running, std::clamp(v, 0.0, 1.0));
        f[i] = running;
    }
    r.back() = r_max;
    table_ = std::make_shared<const Table>(
        Table{cdf, gamma_max, boost::math::interpolators::pchip<std::vector<double>>(
                                  std::move(r), std::move(f))});
}

double TabulatedCdf::operator()(double gamma) const {
    if (gamma <= 0.0) return 0.0;
    if (gamma >= table_->gamma_max) return table_->exact(gamma);
    return std::clamp(table_->spline(std::sqrt(gamma)), 0.0, 1.0);
}

Curve histogram_density(std::span<const double> samples, double bin_width, double lo,
                        double hi) {
    if (!(bin_width > 0.0) || !(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("histogram_density: need bin_width > 0 and finite lo < hi");
    }
    if (samples.empty()) throw DomainError("histogram_density: sample set is empty");
    const double span = (hi - lo) / bin_width;
    const auto bins = static_cast<std::size_t>(std::llround(span));
    if (bins == 0 || std::abs(span - static_cast<double>(bins)) > 1e-9 * span) {
        throw DomainError("histogram_density: range must hold a whole number of bins");
    }
    std::vector<double> counts(bins, 0.0);
    for (double v : samples) {
        if (!(v >= lo && v < hi)) continue;
        const auto b = std::min(bins - 1, static_cast<std::size_t>((v - lo) / bin_width));
        counts[b] += 1.0;
    }
    Curve c;
    c.meta.quantity = Quantity::Density;
    c.meta.abscissa_unit = "gamma";
    c.abscissa.resize(bins);
    c.ordinate.resize(bins);
    const double norm = 1.0 / (static_cast<double>(samples.size()) * bin_width);
    for (std::size_t b = 0; b < bins; ++b) {
        c.abscissa[b] = lo + (static_cast<double>(b) + 0.5) * bin_width;
        c.ordinate[b] = counts[b] * norm;
    }
    return c;
}

SampleMoments sample_moments(std::span<const double> samples) {
    if (samples.size() < 2) throw DomainError("sample_moments: need at least two samples");
    const long double n = static_cast<long double>(samples.size());
    long double s = 0.0L;
    for (double v : samples) s += v;
    const long double mean = s / n;
    long double m2 = 0.0L;
    long double m3 = 0.0L;
    for (double v : samples) {
        const long double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    SampleMoments out;
    out.mean = static_cast<double>(mean);
    out.variance = static_cast<double>(m2 / (n - 1.0L));
    const long double pop2 = m2 / n;
    out.skewness = pop2 > 0.0L ? static_cast<double>((m3 / n) / std::pow(pop2, 1.5L)) : 0.0;
    return out;
}

}  // namespace fdrlos::empirics
