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

#ifndef FDRLOS_QUADRATURE_HPP
#define FDRLOS_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <span>

namespace fdrlos::specfun {

/// How a semi-infinite panel [a, inf) is folded onto [0, 1):
/// t = a + scale * u / (1 - u). The scale should be of the order of the
/// integrand's decay length; the adaptive refinement takes care of the rest.
struct TailPolicy {
    double scale = 1.0;
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_subdivisions = 200;
    TailPolicy tail{};

    /// Throws DomainError unless rel_tol > 0, abs_tol > 0, max_subdivisions >= 1
    /// and tail.scale > 0.
    void validate() const;

    /// Configuration used to produce reference values (rel 1e-12).
    static QuadratureConfig golden();
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
};

using Integrand = std::function<double(double)>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Globally adaptive 10/21-point Gauss-Kronrod integration over [lower, upper],
/// upper may be +infinity. Throws AccuracyError (carrying the best estimate)
/// when the subdivision budget is exhausted, DomainError when the integrand
/// returns NaN.
QuadResult adaptive_quad(const Integrand& f, double lower, double upper,
                         const QuadratureConfig& cfg = {});

/// Same as adaptive_quad, with the range pre-split at the given strictly
/// increasing breakpoints. The last breakpoint may be +infinity. Error
/// control is global across all panels.
QuadResult adaptive_quad(const Integrand& f, std::span<const double> breakpoints,
                         const QuadratureConfig& cfg = {});

}  // namespace fdrlos::specfun

#endif  // FDRLOS_QUADRATURE_HPP
