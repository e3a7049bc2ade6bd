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

#include <boost/math/special_functions/expint.hpp>

#include <cmath>

namespace {

using namespace fdrlos;
using namespace fdrlos::analytic;

TEST(CodingGain, Goldens) {
    // 2 e E1(1)
    EXPECT_REL_NEAR(coding_gain(1.0, 1), 2.0 * std::exp(1.0) * boost::math::expint(1, 1.0), 1e-10);
    EXPECT_REL_NEAR(coding_gain(1.0, 1), 1.1926947246463881487, 1e-10);
    EXPECT_REL_NEAR(coding_gain(1.0, 3), 0.65122079207917140512, 1e-10);
}

TEST(CodingGain, Domain) {
    EXPECT_THROW(coding_gain(0.0, 2), DivergenceError);
    EXPECT_THROW(coding_gain(-1.0, 2), DomainError);
    EXPECT_THROW(coding_gain(1.0, 0), DomainError);
    EXPECT_THROW(asymptotic_op(2.0, 10.0, 0.0, 1), DivergenceError);
}

TEST(CodingGain, StabilizesForLargeM) {
    const double a1 = coding_gain(1.0, 1000);
    const double a2 = coding_gain(1.0, 2000);
    EXPECT_LT(std::abs(a1 - a2) / a1, 1e-3);
    EXPECT_GT(a1, 0.0);
}

TEST(AsymptoticOp, LinearInInverseSnr) {
    const double a = asymptotic_op(2.0, 50.0, 1.0, 3);
    const double b = asymptotic_op(2.0, 500.0, 1.0, 3);
    EXPECT_REL_NEAR(a / b, 10.0, 1e-15);
    EXPECT_REL_NEAR(asymptotic_op(2.0, 1e5, 1.0, 1), 1.1926947246463881487 * 2e-5, 1e-10);
}

TEST(Outage, DecreasingInShape) {
    const double op1 = outage_probability(2.0, FadingParams(1.0, 1.0, 10.0));
    const double op5 = outage_probability(2.0, FadingParams(1.0, 5.0, 10.0));
    const double op15 = outage_probability(2.0, FadingParams(1.0, 15.0, 10.0));
    EXPECT_GT(op1, op5);
    EXPECT_GT(op5, op15);
}

TEST(Outage, DecreasingInAverageSnr) {
    double prev = 1.0;
    for (double db = 0.0; db <= 50.0; db += 2.5) {
        const double op = outage_probability(2.0, FadingParams(3.0, 2.0, std::pow(10.0, db / 10.0)));
        EXPECT_LT(op, prev);
        prev = op;
    }
}

TEST(Outage, VanishingThreshold) {
    EXPECT_EQ(outage_probability(0.0, FadingParams(1.0, 3.0, 10.0)), 0.0);
    EXPECT_LT(outage_probability(1e-9, FadingParams(1.0, 3.0, 10.0)), 1e-9);
}

TEST(Outage, ApproachesAsymptote) {
    const FadingParams p(1.0, 3.0, 1e3);
    EXPECT_REL_NEAR(outage_probability(2.0, p), asymptotic_op(2.0, 1e3, 1.0, 3), 0.05);
    const FadingParams q(1.0, 3.0, 1e6);
    EXPECT_REL_NEAR(outage_probability(2.0, q), asymptotic_op(2.0, 1e6, 1.0, 3), 0.02);
}

TEST(Dispatch, PathsAgree) {
    const FadingParams p(2.0, 3.0, 1.5);
    for (double g : {0.2, 1.5, 6.0}) {
        EXPECT_REL_NEAR(model_pdf(ModelKind::FdRLoS, g, p, EvalPath::ClosedForm),
                        model_pdf(ModelKind::FdRLoS, g, p, EvalPath::Oracle), 1e-8);
        EXPECT_NEAR(model_cdf(ModelKind::FdRLoS, g, p, EvalPath::ClosedForm),
                    model_cdf(ModelKind::FdRLoS, g, p, EvalPath::Oracle), 1e-9);
        EXPECT_REL_NEAR(model_pdf(ModelKind::RicianShadowed, g, p, EvalPath::ClosedForm),
                        model_pdf(ModelKind::RicianShadowed, g, p, EvalPath::Auto), 1e-10);
        EXPECT_NEAR(model_cdf(ModelKind::RicianShadowed, g, p, EvalPath::ClosedForm),
                    model_cdf(ModelKind::RicianShadowed, g, p, EvalPath::Oracle), 1e-9);
    }
}

TEST(Dispatch, RealShapeAndMissingClosedForms) {
    const FadingParams p(2.0, 2.5, 1.5);
    EXPECT_EQ(model_cdf(ModelKind::FdRLoS, 1.0, p, EvalPath::Auto),
              fdrlos_cdf_oracle(1.0, p));
    EXPECT_THROW(model_cdf(ModelKind::FdRLoS, 1.0, p, EvalPath::ClosedForm), DomainError);
    EXPECT_THROW(model_pdf(ModelKind::DRLoS, 1.0, p, EvalPath::ClosedForm), DomainError);
    EXPECT_NO_THROW(model_pdf(ModelKind::DRLoS, 1.0, p, EvalPath::Auto));
}

TEST(Dispatch, ShapeIsIgnoredForDeterministicLos) {
    const FadingParams a(2.0, 1.0, 1.5);
    const FadingParams b(2.0, 7.0, 1.5);
    EXPECT_EQ(model_cdf(ModelKind::Rician, 1.0, a), model_cdf(ModelKind::Rician, 1.0, b));
    EXPECT_EQ(model_pdf(ModelKind::DRLoS, 1.0, a), model_pdf(ModelKind::DRLoS, 1.0, b));
}

}  // namespace
