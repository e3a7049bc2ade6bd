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

#ifndef FDRLOS_ERRORS_HPP
#define FDRLOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdrlos {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure did not reach its requested accuracy. The best
/// estimate obtained so far travels with the exception.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// The requested quantity diverges (e.g. the high-SNR outage asymptote at K = 0).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied object broke its documented contract (e.g. a CDF that decreases).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fdrlos

#endif  // FDRLOS_ERRORS_HPP
