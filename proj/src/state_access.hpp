// Copyright 2026 The QPIE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qpie/statevector.hpp"

namespace qpie::detail {

/// Library-internal mutable access to state amplitudes.
struct StateAccess {
    static std::vector<Complex>& amplitudes(QuantumState& s) { return s.amps_; }

    /// Wraps amplitudes without normalization checks.
    static QuantumState adopt(int n, std::vector<Complex> amps) {
        return QuantumState(n, std::move(amps));
    }
};

/// Throws NormTooFar if |norm - 1| exceeds kNormTolerance.
void check_unit_norm(const QuantumState& s, const char* where);

}  // namespace qpie::detail
