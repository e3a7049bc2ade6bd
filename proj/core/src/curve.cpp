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


#include "fdrlos/curve.hpp"

#include "fdrlos/errors.hpp"

#include <cmath>
#include <sstream>

namespace fdrlos {

std::string_view to_string(Quantity q) {
    switch (q) {
    case Quantity::Density: return "density";
    case Quantity::Probability: return "probability";
    case Quantity::OutageProbability: return "outage_probability";
    case Quantity::Other: break;
    }
    return "other";
}

void Curve::validate() const {
    if (abscissa.size() != ordinate.size()) {
        throw ContractViolation("Curve: abscissa and ordinate lengths differ");
    }
    for (std::size_t i = 1; i < abscissa.size(); ++i) {
        if (!(abscissa[i] > abscissa[i - 1])) {
            std::ostringstream os;
            os << "Curve: abscissa not strictly increasing at index " << i;
            throw ContractViolation(os.str());
        }
    }
    const bool probability =
        meta.quantity == Quantity::Probability || meta.quantity == Quantity::OutageProbability;
    for (std::size_t i = 0; i < ordinate.size(); ++i) {
        const double v = ordinate[i];
        const bool bad = (probability && !(v >= 0.0 && v <= 1.0)) ||
                         (meta.quantity == Quantity::Density && !(v >= 0.0));
        if (bad) {
            std::ostringstream os;
            os << "Curve: " << to_string(meta.quantity) << " value " << v << " out of range at index "
               << i;
            throw ContractViolation(os.str());
        }
    }
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2 || !(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("linspace: need finite lo < hi and n >= 2");
    }
    std::vector<double> g(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0)) throw DomainError("logspace: lo must be > 0");
    std::vector<double> g = linspace(std::log(lo), std::log(hi), n);
    for (double& v : g) v = std::exp(v);
    g.front() = lo;
    g.back() = hi;
    return g;
}

}  // namespace fdrlos
