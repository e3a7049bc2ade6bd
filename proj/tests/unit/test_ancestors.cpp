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


#include "test_util.hpp"

#include "fdrlos/analytic.hpp"
#include "fdrlos/errors.hpp"
#include "fdrlos/quadrature.hpp"

#include <boost/math/distributions/non_central_chi_squared.hpp>

#include <array>
#include <cmath>

namespace {

using namespace fdrlos;
using namespace fdrlos::analytic;
namespace sf = fdrlos::specfun;

TEST(Rician, NoLosIsExponential) {
    EXPECT_REL_NEAR(rician_pdf(0.8, 0.0, 2.0), std::exp(-0.4) / 2.0, 1e-14);
    EXPECT_REL_NEAR(rician_cdf(0.8, 0.0, 2.0), -std::expm1(-0.4), 1e-10);
}

TEST(Rician, CdfMatchesNoncentralChiSquared) {
    // 2 (1+K) g / gbar is noncentral chi-squared with 2 degrees of freedom and
    // noncentrality 2K.
    for (double k : {0.3, 3.0, 30.0}) {
        const boost::math::non_central_chi_squared dist(2.0, 2.0 * k);
        for (double g : {0.1, 0.9, 2.5}) {
            const double gbar = 1.2;
            const double want = boost::math::cdf(dist, 2.0 * (1.0 + k) * g / gbar);
            EXPECT_NEAR(rician_cdf(g, k, gbar), want, 1e-10) << k << ' ' << g;
            EXPECT_REL_NEAR(rician_pdf(g, k, gbar),
                            boost::math::pdf(dist, 2.0 * (1.0 + k) * g / gbar) * 2.0 * (1.0 + k) / gbar,
                            1e-9);
        }
    }
}

TEST(Rician, DeepLosStaysFinite) {
    // I0 overflows near 2 sqrt(K (1+K) g / gbar) ~ 713 without scaling.
    const double v = rician_pdf(1.0, 5e3, 1.0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 1.0);
    EXPECT_NEAR(rician_cdf(1.3, 5e3, 1.0), 1.0, 1e-9);  // about 14 diffuse std devs above the LoS
}

TEST(Drlos, Normalization) {
    auto cfg = sf::QuadratureConfig{1e-9, 1e-14, 400, {}};
    const double mode = drlos_mode(5.0, 2.0);
    const std::array<double, 3> pts{0.0, mode, sf::kInfinity};
    const auto r = sf::adaptive_quad([](double g) { return drlos_pdf_oracle(g, 5.0, 2.0); }, pts, cfg);
    EXPECT_NEAR(r.value, 1.0, 1e-7);
}

TEST(Drlos, CdfConsistentWithPdf) {
    const auto q = sf::adaptive_quad([](double g) { return drlos_pdf_oracle(g, 2.0, 1.0); }, 0.0, 0.4,
                                     sf::QuadratureConfig{1e-10, 1e-14, 400, {}});
    EXPECT_NEAR(drlos_cdf_oracle(0.4, 2.0, 1.0), q.value, 1e-8);
}

TEST(Drlos, NoLosEqualsFdrlosNoLos) {
    for (double g : {0.05, 0.5, 3.0}) {
        EXPECT_REL_NEAR(drlos_pdf_oracle(g, 0.0, 1.0), fdrlos_pdf_oracle(g, FadingParams(0.0, 2.0, 1.0)),
                        1e-8);
        EXPECT_NEAR(drlos_cdf_oracle(g, 0.0, 1.0), fdrlos_cdf_oracle(g, FadingParams(0.0, 2.0, 1.0)),
                    1e-9);
    }
}

TEST(Drlos, PeakAtLosPower) {
    const double mode = drlos_mode(5.0, 2.0);
    EXPECT_REL_NEAR(mode, 2.0 * 5.0 / 6.0, 1e-15);
    const double at = drlos_pdf_oracle(mode * (1.0 + 1e-6), 5.0, 2.0);
    EXPECT_GT(at, drlos_pdf_oracle(mode * 0.9, 5.0, 2.0));
    EXPECT_GT(at, drlos_pdf_oracle(mode * 1.1, 5.0, 2.0));
    EXPECT_THROW(drlos_mode(-1.0, 1.0), DomainError);
}

}  // namespace
