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


#ifndef FDRLOS_EMPIRICS_HPP
#define FDRLOS_EMPIRICS_HPP

#include "fdrlos/curve.hpp"
#include "fdrlos/models.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace fdrlos::empirics {

using CdfFunction = std::function<double(double)>;

/// Right-continuous empirical CDF: F_n(x) = #{samples <= x} / n.
class EmpiricalCdf {
public:
    /// Throws DomainError on an empty or non-finite sample set.
    explicit EmpiricalCdf(std::vector<double> samples);
    explicit EmpiricalCdf(const SnrSampleSet& set) : EmpiricalCdf(set.values) {}

    double operator()(double x) const;
    std::size_t size() const noexcept { return sorted_.size(); }
    const std::vector<double>& sorted() const noexcept { return sorted_; }

private:
    std::vector<double> sorted_;
};

struct KsReport {
    double statistic = 0.0;  // sup |F_n - F|
    std::size_t n = 0;
    double threshold = 0.0;
    bool pass = false;
};

/// 3 * 1.36 / sqrt(n).
double ks_threshold(std::size_t n);

/// Two-sided KS distance between the samples and `cdf`. `cdf` is evaluated
/// once per sample; throws ContractViolation if it decreases along the
/// sorted samples.
KsReport ks_distance(std::span<const double> samples, const CdfFunction& cdf);
KsReport ks_distance(const SnrSampleSet& samples, const CdfFunction& cdf);
KsReport ks_distance(const EmpiricalCdf& ecdf, const CdfFunction& cdf);

/// Two-sample KS distance; threshold 3 * 1.36 * sqrt((n1 + n2) / (n1 n2)).
KsReport ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Monotone (PCHIP) interpolant of an expensive CDF on a grid uniform in
/// sqrt(gamma) over [0, gamma_max]. Beyond gamma_max the wrapped CDF is called
/// directly. Copies share the table.
class TabulatedCdf {
public:
    TabulatedCdf(const CdfFunction& cdf, double gamma_max, std::size_t nodes = 4001);
    double operator()(double gamma) const;

private:
    struct Table;
    std::shared_ptr<const Table> table_;
};

/// Bin heights count / (n * bin_width) over [lo, hi) with bins of width
/// bin_width starting at lo; abscissa holds the bin centers. (hi - lo) must be
/// a whole number of bins.
Curve histogram_density(std::span<const double> samples, double bin_width, double lo, double hi);

struct SampleMoments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double skewness = 0.0;
};

SampleMoments sample_moments(std::span<const double> samples);

}  // namespace fdrlos::empirics

#endif  // FDRLOS_EMPIRICS_HPP
