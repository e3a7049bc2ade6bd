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

// Internal helpers shared by the analytic translation units.

#ifndef FDRLOS_SRC_DETAIL_HPP
#define FDRLOS_SRC_DETAIL_HPP

#include "fdrlos/quadrature.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <string>

namespace fdrlos::detail {

inline double lgamma(double v) { return boost::math::lgamma(v); }

inline double log_binomial(int n, int k) {
    return lgamma(n + 1.0) - lgamma(k + 1.0) - lgamma(n - k + 1.0);
}

void require_nonnegative(double value, const char* what);
void require_positive(double value, const char* what);

// Rician shadowed CDF by direct quadrature of the Kummer-form density.
double rs_cdf_quadrature(double gamma, double k_x, double m, double gamma_bar_x,
                         const fdrlos::specfun::QuadratureConfig& cfg);

}  // namespace fdrlos::detail

#endif  // FDRLOS_SRC_DETAIL_HPP
