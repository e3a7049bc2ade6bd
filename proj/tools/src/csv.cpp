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


#include "fdrlos_cli/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace fdrlos::cli {

namespace {

double parse_field(std::string_view s, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error("csv: bad number '" + std::string(s) + "' on line " +
                                 std::to_string(line));
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_curve_csv(std::ostream& os, const Curve& curve) {
    os << "abscissa,value\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        os << format_double(curve.abscissa[i]) << ',' << format_double(curve.ordinate[i]) << '\n';
    }
}

Curve read_curve_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "abscissa,value") {
        throw std::runtime_error("csv: expected header 'abscissa,value'");
    }
    Curve c;
    std::size_t n = 1;
    while (std::getline(is, line)) {
        ++n;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("csv: missing separator on line " + std::to_string(n));
        }
        const std::string_view sv(line);
        c.abscissa.push_back(parse_field(sv.substr(0, comma), n));
        c.ordinate.push_back(parse_field(sv.substr(comma + 1), n));
    }
    return c;
}

void write_samples_csv(std::ostream& os, std::span<const double> samples) {
    os << "gamma\n";
    for (double v : samples) os << format_double(v) << '\n';
}

}  // namespace fdrlos::cli
