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

#include "fdrlos/errors.hpp"
#include "fdrlos/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include <cmath>

namespace {

namespace sf = fdrlos::specfun;

// Upper incomplete gamma for any real a from Boost, using
// G(a, z) = (G(a + 1, z) - z^a e^-z) / a to step down to a < 0.
double upper_gamma(double a, double z) {
    if (a > 0.0) return boost::math::tgamma(a, z);
    if (a == 0.0) return boost::math::expint(1, z);
    return (upper_gamma(a + 1.0, z) - std::pow(z, a) * std::exp(-z)) / a;
}

TEST(GenIncompleteGamma, Goldens) {
    // mpmath, 50 digits (tests/golden/generate_golden.py)
    EXPECT_REL_NEAR(sf::gen_incomplete_gamma(1.0, 1.0, 0.0), 0.3678794411714423216, 1e-12);
    EXPECT_REL_NEAR(sf::gen_incomplete_gamma(-2.0, 0.2, 1.5), 0.17218473217639855804, 1e-10);
    EXPECT_REL_NEAR(sf::gen_incomplete_gamma(1.0, 1.0, 1.0), 0.20753352343482877323, 1e-10);
}

TEST(GenIncompleteGamma, BesselIdentityNearZ0) {
    // G(1, 0, b) = 2 sqrt(b) K1(2 sqrt(b)); z = 1e-12 is indistinguishable here.
    const double want = 2.0 * boost::math::cyl_bessel_k(1, 2.0);
    EXPECT_REL_NEAR(sf::gen_incomplete_gamma(1.0, 1e-12, 1.0), want, 1e-9);
}

TEST(GenIncompleteGamma, ReducesToUpperGamma) {
    for (double a : {-2.0, -0.5, 1.0, 3.5}) {
        for (double z : {0.1, 1.0, 5.0}) {
            EXPECT_REL_NEAR(sf::gen_incomplete_gamma(a, z, 0.0), upper_gamma(a, z), 1e-9)
                << "a=" << a << " z=" << z;
        }
    }
}

TEST(GenIncompleteGamma, DecreasingInZAndB) {
    for (double a : {-3.0, 0.0, 2.0}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double z : {0.05, 0.2, 1.0, 3.0, 10.0}) {
            const double v = sf::gen_incomplete_gamma(a, z, 0.7);
            EXPECT_LT(v, prev);
            prev = v;
        }
        prev = std::numeric_limits<double>::infinity();
        for (double b : {0.0, 0.1, 1.0, 5.0, 40.0}) {
            const double v = sf::gen_incomplete_gamma(a, 0.5, b);
            EXPECT_LT(v, prev);
            prev = v;
        }
    }
}

TEST(GenIncompleteGamma, ScaledFormMatchesAndSurvivesLargeZ) {
    const double z = 2.5;
    EXPECT_REL_NEAR(sf::gen_incomplete_gamma_scaled(-4.0, z, 3.0),
                    std::exp(z) * sf::gen_incomplete_gamma(-4.0, z, 3.0), 1e-10);
    // e^z G(a, z, b) ~ z^(a-1) e^(-b/z) for large z; G itself underflows.
    const double big = 900.0;
    const double v = sf::gen_incomplete_gamma_scaled(-2.0, big, 1.0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_REL_NEAR(v, std::pow(big, -3.0) * std::exp(-1.0 / big), 5e-3);
    EXPECT_EQ(sf::gen_incomplete_gamma(-2.0, big, 1.0), 0.0);
}

TEST(GenIncompleteGamma, Domain) {
    EXPECT_THROW(sf::gen_incomplete_gamma(-1.0, 0.0, 0.0), fdrlos::DomainError);
    EXPECT_THROW(sf::gen_incomplete_gamma(1.0, -1.0, 0.0), fdrlos::DomainError);
    EXPECT_THROW(sf::gen_incomplete_gamma(1.0, 1.0, -1.0), fdrlos::DomainError);
    EXPECT_NO_THROW(sf::gen_incomplete_gamma(1.5, 0.0, 0.0));
}

TEST(Kummer, TrivialValues) {
    EXPECT_DOUBLE_EQ(sf::kummer_1f1(2.3, 1.7, 0.0), 1.0);
    EXPECT_REL_NEAR(sf::kummer_1f1(1.0, 1.0, 2.0), 7.38905609893065, 1e-14);
}

TEST(Kummer, Goldens) {
    EXPECT_REL_NEAR(sf::kummer_1f1(3.0, 1.0, 0.7), 5.3263759112594103997, 1e-14);
    EXPECT_REL_NEAR(sf::kummer_1f1(2.5, 1.0, 60.0), 4.1426709884458383045e+28, 1e-10);
    EXPECT_REL_NEAR(sf::kummer_1f1_scaled(8.0, 1.0, 700.0), 17513713012927678.778, 1e-10);
}

TEST(Kummer, AgreesWithBoostOverOperatingRange) {
    for (double a : {0.5, 1.0, 2.5, 3.0, 8.0}) {
        for (double x : {0.01, 1.0, 10.0, 45.0, 55.0, 120.0, 400.0}) {
            const double want = boost::math::hypergeometric_1F1(a, 1.0, x) * std::exp(-x);
            EXPECT_REL_NEAR(sf::kummer_1f1_scaled(a, 1.0, x), want, 1e-10)
                << "a=" << a << " x=" << x;
        }
    }
}

TEST(Kummer, DerivativeIdentity) {
    for (double a : {0.7, 2.0, 4.5}) {
        for (double b : {1.0, 2.5}) {
            for (double x : {0.3, 5.0, 30.0, 70.0}) {
                const double h = 1e-5 * std::max(1.0, x);
                const double fd = (sf::kummer_1f1(a, b, x + h) - sf::kummer_1f1(a, b, x - h)) / (2 * h);
                EXPECT_REL_NEAR(fd, a / b * sf::kummer_1f1(a + 1.0, b + 1.0, x), 1e-6)
                    << a << ' ' << b << ' ' << x;
            }
        }
    }
}

TEST(Kummer, LogScaledConsistent) {
    EXPECT_REL_NEAR(std::exp(sf::log_kummer_1f1_scaled(3.0, 1.0, 20.0)),
                    sf::kummer_1f1_scaled(3.0, 1.0, 20.0), 1e-13);
    EXPECT_TRUE(std::isfinite(sf::log_kummer_1f1_scaled(50.0, 1.0, 1e5)));
}

TEST(Kummer, Domain) {
    EXPECT_THROW(sf::kummer_1f1(1.0, 0.0, 1.0), fdrlos::DomainError);
    EXPECT_THROW(sf::kummer_1f1(1.0, -2.0, 1.0), fdrlos::DomainError);
    EXPECT_THROW(sf::kummer_1f1(3.0, 1.0, 800.0), fdrlos::AccuracyError);
}

TEST(Tricomi, Goldens) {
    EXPECT_REL_NEAR(sf::tricomi_u(1, 1.0), 0.59634736232319407434, 1e-10);
    EXPECT_REL_NEAR(sf::tricomi_u(2, 0.5), 0.38436594872559570325, 1e-10);
}

TEST(Tricomi, ExponentialIntegralIdentity) {
    for (double x : {0.1, 1.0, 10.0}) {
        EXPECT_REL_NEAR(sf::tricomi_u(1, x) * std::exp(-x), boost::math::expint(1, x), 1e-9);
    }
}

TEST(Tricomi, LargeArgument) {
    const double x = 1e6;
    for (int m : {1, 2, 5}) {
        EXPECT_REL_NEAR(sf::tricomi_u(m, x) * std::pow(x, m), 1.0, 1e-2);
    }
    EXPECT_REL_NEAR(sf::tricomi_u(2, x) * 1e12, 0.999996000017999904, 1e-9);
}

TEST(Tricomi, DecreasingInX) {
    for (int m : {1, 3, 10}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double x : {0.01, 0.1, 0.5, 2.0, 20.0, 200.0}) {
            const double v = sf::tricomi_u(m, x);
            EXPECT_GT(v, 0.0);
            EXPECT_LT(v, prev);
            prev = v;
        }
    }
}

TEST(Tricomi, Domain) {
    EXPECT_THROW(sf::tricomi_u(1, 0.0), fdrlos::DomainError);
    EXPECT_THROW(sf::tricomi_u(0, 1.0), fdrlos::DomainError);
    EXPECT_THROW(sf::tricomi_u(2, -1.0), fdrlos::DomainError);
}

}  // namespace
