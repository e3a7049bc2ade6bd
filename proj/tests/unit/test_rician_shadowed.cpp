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

#include <cmath>
#include <numeric>

namespace {

using namespace fdrlos::analytic;
namespace sf = fdrlos::specfun;

TEST(RicianShadowed, NoLosIsExponential) {
    for (double m : {0.5, 1.0, 4.0}) {
        EXPECT_REL_NEAR(rs_pdf(1.0, 0.0, m, 1.0), std::exp(-1.0), 1e-14);
        EXPECT_REL_NEAR(rs_pdf(0.3, 0.0, m, 2.0), std::exp(-0.15) / 2.0, 1e-14);
    }
    EXPECT_REL_NEAR(rs_cdf_integer(1.3, 0.0, 3, 2.0), -std::expm1(-0.65), 1e-14);
}

TEST(RicianShadowed, UnitShapeIsExponential) {
    EXPECT_REL_NEAR(rs_pdf(1.0, 2.0, 1.0, 1.0), 0.36787944117144233, 1e-13);
    EXPECT_REL_NEAR(rs_cdf_integer(0.7, 2.0, 1, 1.0), -std::expm1(-0.7), 1e-14);
}

TEST(RicianShadowed, NormalizationRealShape) {
    const auto r = sf::adaptive_quad([](double g) { return rs_pdf(g, 3.0, 2.5, 2.0); }, 0.0,
                                     sf::kInfinity, sf::QuadratureConfig::golden());
    EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(RicianShadowed, Goldens) {
    EXPECT_REL_NEAR(rs_pdf(1.0, 3.0, 2.5, 2.0), 0.31958195965081960779, 1e-12);
    EXPECT_REL_NEAR(rs_cdf_integer(2.0, 4.0, 2, 1.5), 0.73108675719011032236, 1e-12);
    EXPECT_REL_NEAR(rs_cdf(2.0, 4.0, 2.0, 1.5), 0.73108675719011032236, 1e-12);
}

TEST(RicianShadowed, CdfIsIntegralOfPdf) {
    for (double m : {1.5, 2.0, 6.0}) {
        const double g = 1.7;
        const auto q = sf::adaptive_quad([&](double u) { return rs_pdf(u, 4.0, m, 1.5); }, 0.0, g,
                                         sf::QuadratureConfig::golden());
        EXPECT_REL_NEAR(rs_cdf(g, 4.0, m, 1.5), q.value, 1e-9) << m;
    }
    EXPECT_EQ(rs_cdf_integer(0.0, 1.0, 2, 1.0), 0.0);
    EXPECT_THROW(rs_cdf_integer(-1.0, 1.0, 2, 1.0), fdrlos::DomainError);
    EXPECT_THROW(rs_pdf(-1.0, 1.0, 2.0, 1.0), fdrlos::DomainError);
}

TEST(RicianShadowed, MixtureSumsToOneAndMatchesKummer) {
    const double k = 5.0;
    const double gbar = 2.0;
    const auto t = rs_pdf_integer_terms(1.0, k, 3, gbar);
    ASSERT_EQ(t.m(), 3);
    EXPECT_NEAR(std::accumulate(t.coefficients.begin(), t.coefficients.end(), 0.0), 1.0, 1e-15);
    for (double c : t.coefficients) EXPECT_GE(c, 0.0);
    for (double g : {0.5, 1.0, 4.0}) {
        EXPECT_REL_NEAR(t.pdf(g), rs_pdf(g, k, 3.0, gbar), 1e-10);
    }
}

TEST(RicianShadowed, MixtureDegenerateCases) {
    const auto one = rs_pdf_integer_terms(0.7, 5.0, 1, 2.0);
    ASSERT_EQ(one.m(), 1);
    EXPECT_DOUBLE_EQ(one.coefficients[0], 1.0);
    EXPECT_REL_NEAR(one.omega, 2.0 * (5.0 + 0.7) / 6.0, 1e-15);
    const auto none = rs_pdf_integer_terms(0.7, 0.0, 4, 2.0);
    EXPECT_EQ(none.coefficients, (std::vector<double>{0.0, 0.0, 0.0, 1.0}));
}

TEST(RicianShadowed, ConditionalParametrizationsAgree) {
    // Mixture terms at x of (K, m, gbar) equal those of (K/x, m, gbar (K+x)/(K+1)).
    for (double x : {0.2, 1.0, 3.0}) {
        const auto a = rs_pdf_integer_terms(x, 4.0, 5, 3.0);
        const auto b = rs_mixture_terms(4.0 / x, 5, 3.0 * (4.0 + x) / 5.0);
        EXPECT_REL_NEAR(a.omega, b.omega, 1e-14);
        for (int j = 0; j < 5; ++j) EXPECT_NEAR(a.coefficients[j], b.coefficients[j], 1e-15);
    }
}

TEST(RicianShadowed, KummerAndMixtureAgreeOnGrid) {
    for (double k : {0.5, 5.0, 40.0}) {
        for (int m : {1, 2, 7, 30}) {
            for (double g : {0.01, 0.5, 3.0, 12.0}) {
                EXPECT_REL_NEAR(rs_pdf_integer(g, k, m, 2.0), rs_pdf(g, k, m, 2.0), 1e-10)
                    << k << ' ' << m << ' ' << g;
            }
        }
    }
}

TEST(RicianShadowed, AsymptoticOutage) {
    // slope one and the (1+K)(m/(K+m))^m offset
    const double a = rs_asymptotic_op(2.0, 1e6, 3.0, 2.0);
    EXPECT_REL_NEAR(a, 2e-6 * 4.0 * 4.0 / 25.0, 1e-14);
    EXPECT_REL_NEAR(rs_cdf_integer(2.0, 3.0, 2, 1e6), a, 1e-5);
}

}  // namespace
