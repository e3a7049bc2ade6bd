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


// Figure presets. The parameter families follow the published figures;
// where a legend is not recoverable the chosen set is stated below.

#ifndef FDRLOS_CLI_PRESETS_HPP
#define FDRLOS_CLI_PRESETS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fdrlos::cli::presets {

/// Density for several m at K = 5, gamma_bar = 2 (linear), plus the dRLoS
/// limit and Monte-Carlo histograms. m = {1, 2, 3, 5, 15} is our choice.
struct Fig1 {
    double k = 5.0;
    double gamma_bar = 2.0;
    std::vector<int> m{1, 2, 3, 5, 15};
    double gamma_max = 10.0;
    std::size_t curve_points = 401;
    double bin_width = 0.1;
    std::size_t samples = 10'000'000;
    std::uint64_t seed = 20190101;
};

/// Outage versus gamma_bar at K = 1, gamma_th = 2, with the high-SNR
/// asymptotes and the dRLoS reference. m = {1, 3, 10} is our choice.
struct Fig3 {
    double k = 1.0;
    double gamma_th = 2.0;
    std::vector<int> m{1, 3, 10};
    double db_min = 0.0;
    double db_max = 60.0;
    std::size_t points = 121;
    double mc_db_step = 5.0;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 20190103;
};

/// FdRLoS against Rician shadowed outage at K = 6, gamma_th = 2.
struct Fig4 {
    double k = 6.0;
    double gamma_th = 2.0;
    std::vector<int> m{1, 3, 5, 10};
    double db_min = 0.0;
    double db_max = 40.0;
    std::size_t points = 81;  // 0.5 dB steps
    double mc_db_step = 5.0;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 20190104;
};

/// Outage versus K at gamma_bar = 25 dB, gamma_th = 2.
struct Fig5 {
    double gamma_bar_db = 25.0;
    double gamma_th = 2.0;
    std::vector<int> m{1, 3, 5, 10};
    double k_min = 0.0;
    double k_max = 20.0;
    std::size_t points = 81;  // 0.25 steps
};

inline constexpr std::string_view kNames[] = {"fig1", "fig3", "fig4", "fig5"};

}  // namespace fdrlos::cli::presets

#endif  // FDRLOS_CLI_PRESETS_HPP
