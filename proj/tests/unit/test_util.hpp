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


#ifndef FDRLOS_TESTS_TEST_UTIL_HPP
#define FDRLOS_TESTS_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace fdrlos::test {

inline double rel_err(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got - want) / std::abs(want);
}

}  // namespace fdrlos::test

#define EXPECT_REL_NEAR(got, want, tol)                                                    \
    EXPECT_LE(::fdrlos::test::rel_err((got), (want)), (tol))                               \
        << "got " << std::setprecision(17) << (got) << ", want " << (want)

#endif  // FDRLOS_TESTS_TEST_UTIL_HPP
