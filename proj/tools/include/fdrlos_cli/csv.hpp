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


#ifndef FDRLOS_CLI_CSV_HPP
#define FDRLOS_CLI_CSV_HPP

#include "fdrlos/curve.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace fdrlos::cli {

/// printf("%.17g"): 17 significant digits round-trip any double.
std::string format_double(double v);

/// `abscissa,value` header followed by one row per point, LF line endings.
void write_curve_csv(std::ostream& os, const Curve& curve);
/// Inverse of write_curve_csv. Throws std::runtime_error on malformed input.
Curve read_curve_csv(std::istream& is);

/// One `gamma` column.
void write_samples_csv(std::ostream& os, std::span<const double> samples);

}  // namespace fdrlos::cli

#endif  // FDRLOS_CLI_CSV_HPP
