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

#include "detail.hpp"

#include "fdrlos/errors.hpp"

#include <sstream>

namespace fdrlos::detail {

void require_nonnegative(double value, const char* what) {
    if (!(value >= 0.0) || std::isinf(value)) {
        std::ostringstream os;
        os << what << " must be finite and >= 0 (got " << value << ")";
        throw DomainError(os.str());
    }
}

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || std::isinf(value)) {
        std::ostringstream os;
        os << what << " must be finite and > 0 (got " << value << ")";
        throw DomainError(os.str());
    }
}

}  // namespace fdrlos::detail
