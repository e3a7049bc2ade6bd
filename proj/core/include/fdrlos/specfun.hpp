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

#ifndef FDRLOS_SPECFUN_HPP
#define FDRLOS_SPECFUN_HPP

#include "fdrlos/quadrature.hpp"

namespace fdrlos::specfun {

/// Generalized incomplete gamma function
///
///     G(a, z, b) = int_z^inf t^(a-1) e^(-t) e^(-b/t) dt,
///
/// defined for every real a when z > 0 (and for a > 0 when z = 0), b >= 0.
/// Reduces to the upper incomplete gamma function when b = 0.
double gen_incomplete_gamma(double a, double z, double b, const QuadratureConfig& cfg = {});

/// e^z * G(a, z, b), evaluated as one shifted integral so that the
/// exponent stays bounded for large z.
double gen_incomplete_gamma_scaled(double a, double z, double b,
                                   const QuadratureConfig& cfg = {});

/// Kummer's confluent hypergeometric function 1F1(a; b; x).
/// Throws DomainError when b is a nonpositive integer and AccuracyError
/// when the result is not representable in double precision.
double kummer_1f1(double a, double b, double x);

/// e^(-x) * 1F1(a; b; x), safe for large positive x.
double kummer_1f1_scaled(double a, double b, double x);

/// log(e^(-x) * 1F1(a; b; x)) for a >= 0, b > 0, x >= 0 (the function is
/// positive there).
double log_kummer_1f1_scaled(double a, double b, double x);

/// Tricomi's confluent hypergeometric function U(m, 1, x), integer m >= 1, x > 0,
/// from Gamma(m) U(m,1,x) = int_0^inf e^(-x t) t^(m-1) (1+t)^(-m) dt.
double tricomi_u(int m, double x, const QuadratureConfig& cfg = {});

/// Gamma(m) * U(m, 1, x); stays finite for large m where Gamma(m) overflows.
double tricomi_u_scaled(int m, double x, const QuadratureConfig& cfg = {});

}  // namespace fdrlos::specfun

#endif  // FDRLOS_SPECFUN_HPP
