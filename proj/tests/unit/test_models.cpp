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
#include "fdrlos/empirics.hpp"
#include "fdrlos/errors.hpp"
#include "fdrlos/models.hpp"
#include "fdrlos/rng.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

namespace {

using namespace fdrlos;
namespace an = fdrlos::analytic;
namespace em = fdrlos::empirics;

TEST(Params, Validation) {
    EXPECT_THROW(FadingParams(-1.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(FadingParams(1.0, 0.0, 1.0), DomainError);
    EXPECT_THROW(FadingParams(1.0, 1.0, 0.0), DomainError);
    EXPECT_THROW(FadingParams(std::nan(""), 1.0, 1.0), DomainError);
    const FadingParams p(3.0, 2.0, 5.0);
    EXPECT_DOUBLE_EQ(p.los_power() + p.diffuse_power(), 1.0);
    EXPECT_DOUBLE_EQ(p.los_power() / p.diffuse_power(), 3.0);
    EXPECT_EQ(p.integer_m(), 2);
    EXPECT_THROW(FadingParams(1.0, 2.5, 1.0).integer_m(), DomainError);
    EXPECT_FALSE(FadingParams(1.0, 2.5, 1.0).has_integer_m());
}

TEST(Params, ModelNames) {
    for (ModelKind k : {ModelKind::Rician, ModelKind::RicianShadowed, ModelKind::DRLoS,
                        ModelKind::FdRLoS}) {
        EXPECT_EQ(parse_model_kind(to_string(k)), k);
    }
    EXPECT_EQ(parse_model_kind("rician-shadowed"), ModelKind::RicianShadowed);
    EXPECT_FALSE(parse_model_kind("nakagami").has_value());
}

TEST(Rng, SubstreamsDiffer) {
    EXPECT_NE(stream_key(1, 0), stream_key(1, 1));
    EXPECT_NE(stream_key(1, 0), stream_key(2, 0));
    RngStream a(7, 3);
    RngStream b(7, 3);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, ComplexGaussianUnitPower) {
    RngStream s(11, 0);
    long double p = 0.0L;
    const int n = 400000;
    for (int i = 0; i < n; ++i) p += std::norm(s.complex_gaussian());
    EXPECT_NEAR(static_cast<double>(p / n), 1.0, 0.01);
}

TEST(Rng, GammaMoments) {
    auto moments = [](double m) {
        RngStream s(2024, 0);
        return em::sample_moments(sample_gamma_rv(m, 1'000'000, s));
    };
    EXPECT_NEAR(moments(1.0).mean, 1.0, 0.005);
    EXPECT_NEAR(moments(5.0).variance, 0.2, 0.01);
    EXPECT_NEAR(moments(0.5).skewness, 2.0 / std::sqrt(0.5), 0.05);
    RngStream s(1, 1);
    EXPECT_THROW(sample_gamma_rv(0.0, 10, s), DomainError);
    EXPECT_THROW(sample_gamma_rv(1.0, 0, s), DomainError);
}

TEST(Rng, GammaKsAgainstBoost) {
    // Gamma(m, 1/m) CDF is P(m, m x).
    for (double m : {0.3, 1.0, 2.5, 40.0}) {
        RngStream s(5, static_cast<std::uint64_t>(m * 10));
        const auto v = sample_gamma_rv(m, 200'000, s);
        const auto ks = em::ks_distance(v, [m](double x) {
            return x <= 0.0 ? 0.0 : boost::math::gamma_p(m, m * x);
        });
        EXPECT_TRUE(ks.pass) << "m=" << m << " D=" << ks.statistic;
    }
}

TEST(Sampler, DeterministicAcrossThreads) {
    const FadingParams p(5.0, 3.0, 2.0);
    const std::size_t n = 3 * kSampleChunk + 123;
    const auto one = sample_snr(ModelKind::FdRLoS, p, n, 42, {1});
    for (unsigned t : {2u, 3u, 8u}) {
        const auto many = sample_snr(ModelKind::FdRLoS, p, n, 42, {t});
        ASSERT_EQ(one.values.size(), many.values.size());
        EXPECT_EQ(0, std::memcmp(one.values.data(), many.values.data(), n * sizeof(double)))
            << t << " threads";
    }
    const auto other = sample_snr(ModelKind::FdRLoS, p, n, 43, {1});
    EXPECT_NE(one.values, other.values);
}

TEST(Sampler, MeanIsGammaBar) {
    const FadingParams p(5.0, 3.0, 2.0);
    for (ModelKind k : {ModelKind::Rician, ModelKind::RicianShadowed, ModelKind::DRLoS,
                        ModelKind::FdRLoS}) {
        const auto s = sample_snr(k, p, 2'000'000, 9);
        EXPECT_NEAR(em::sample_moments(s.view()).mean, 2.0, 0.01) << to_string(k);
        EXPECT_TRUE(std::all_of(s.values.begin(), s.values.end(), [](double v) { return v >= 0.0; }));
    }
}

TEST(Sampler, EmptyIsError) {
    EXPECT_THROW(sample_snr(ModelKind::FdRLoS, FadingParams(1, 1, 1), 0, 1), DomainError);
    EXPECT_THROW(sample_fdrlos_conditional(FadingParams(1, 1, 1), 1.0, 0, 1), DomainError);
    EXPECT_THROW(sample_fdrlos_conditional(FadingParams(1, 1, 1), 0.0, 10, 1), DomainError);
}

TEST(Sampler, PhaseInvariance) {
    const FadingParams p(4.0, 2.0, 1.0);
    const std::size_t n = 500'000;
    const auto a = sample_snr(ModelKind::FdRLoS, p, n, 77, {0, 0.0});
    const auto b = sample_snr(ModelKind::FdRLoS, p, n, 78, {0, std::numbers::pi / 3});
    const auto ks = em::ks_two_sample(a.view(), b.view());
    EXPECT_LT(ks.statistic, 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST(Sampler, RicianShadowedUnitShapeIsRayleigh) {
    const auto s = sample_snr(ModelKind::RicianShadowed, FadingParams(2.0, 1.0, 1.5), 1'000'000, 3);
    const auto ks = em::ks_distance(s, [](double g) { return -std::expm1(-g / 1.5); });
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

TEST(Sampler, NoLosMatchesRayleighProductLaw) {
    const FadingParams p(0.0, 2.0, 1.0);
    const auto s = sample_snr(ModelKind::FdRLoS, p, 1'000'000, 5);
    const double gmax = *std::max_element(s.values.begin(), s.values.end());
    const em::TabulatedCdf ref([&](double g) { return an::fdrlos_cdf_oracle(g, p); }, gmax, 1001);
    EXPECT_LT(em::ks_distance(s, ref).statistic, 0.002);
}

TEST(Sampler, LargeShapeApproachesDrlos) {
    const FadingParams p(5.0, 1e4, 2.0);
    const auto s = sample_snr(ModelKind::FdRLoS, p, 1'000'000, 6);
    const double gmax = *std::max_element(s.values.begin(), s.values.end());
    const em::TabulatedCdf ref([](double g) { return an::drlos_cdf_oracle(g, 5.0, 2.0); }, gmax,
                               513);
    EXPECT_LT(em::ks_distance(s, ref).statistic, 0.005);
}

class ConditionalSlice : public ::testing::TestWithParam<double> {};

TEST_P(ConditionalSlice, IsRicianShadowed) {
    const double x = GetParam();
    const FadingParams p(5.0, 3.0, 2.0);
    const auto v = sample_fdrlos_conditional(p, x, 1'000'000, 100);
    const double k_x = p.k() / x;
    const double gbar_x = p.gamma_bar() * (p.k() + x) / (p.k() + 1.0);
    const auto ks = em::ks_distance(v, [&](double g) { return an::rs_cdf_integer(g, k_x, 3, gbar_x); });
    EXPECT_TRUE(ks.pass) << "x=" << x << " D=" << ks.statistic;
}

INSTANTIATE_TEST_SUITE_P(Slices, ConditionalSlice, ::testing::Values(0.5, 1.0, 2.0));

}  // namespace
