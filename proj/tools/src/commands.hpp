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


#ifndef FDRLOS_CLI_COMMANDS_HPP
#define FDRLOS_CLI_COMMANDS_HPP

#include "fdrlos/curve.hpp"
#include "fdrlos/params.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fdrlos::cli {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 0;
    bool log = false;

    std::vector<double> values() const;
};

/// Parses "min:max:points[:lin|log]". Throws DomainError.
GridSpec parse_grid(const std::string& text);

/// Figure generation; returns the files written, in order.
std::vector<std::filesystem::path> write_figure(const std::string& name,
                                                const std::filesystem::path& dir,
                                                std::optional<std::size_t> samples,
                                                unsigned threads);

}  // namespace fdrlos::cli

#endif  // FDRLOS_CLI_COMMANDS_HPP
