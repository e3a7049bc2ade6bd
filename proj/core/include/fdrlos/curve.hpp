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


#ifndef FDRLOS_CURVE_HPP
#define FDRLOS_CURVE_HPP

#include "fdrlos/params.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdrlos {

/// What the ordinate of a curve holds.
enum class Quantity { Density, Probability, OutageProbability, Other };

std::string_view to_string(Quantity q);

struct CurveMeta {
    std::optional<ModelKind> model;
    std::optional<FadingParams> params;
    Quantity quantity = Quantity::Other;
    std::string abscissa_unit;  // "gamma", "gamma_bar_db", "K", ...
    std::string label;
};

/// A sampled function of one variable, e.g. a PDF over gamma or an OP over gamma_bar.
struct Curve {
    std::vector<double> abscissa;
    std::vector<double> ordinate;
    CurveMeta meta;

    std::size_t size() const noexcept { return abscissa.size(); }

    /// Throws ContractViolation unless the lengths match, the abscissa is
    /// strictly increasing, probabilities lie in [0, 1] and densities are >= 0.
    void validate() const;
};

/// n points from lo to hi inclusive (n >= 2, lo < hi).
std::vector<double> linspace(double lo, double hi, std::size_t n);
/// n logarithmically spaced points from lo to hi inclusive (0 < lo < hi).
std::vector<double> logspace(double lo, double hi, std::size_t n);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

}  // namespace fdrlos

#endif  // FDRLOS_CURVE_HPP
