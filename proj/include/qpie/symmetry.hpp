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

#include <complex>
#include <cstddef>
#include <cstdint>

#include "qpie/circuit.hpp"
#include "qpie/statevector.hpp"

namespace qpie {

/// Registers up to this size are run through the explicit SWAP-test circuit;
/// larger ones use the analytic ancilla probability.
inline constexpr int kMaxSwapTestCircuitQubits = 21;

/// |<f|U_NOT|f>| at or above this reads as inversion-symmetric in the CLI.
inline constexpr double kDefaultSymmetryThreshold = 0.99;

struct OverlapEstimate {
    /// <a|b>.
    Complex analytic;
    /// |<a|b>|^2.
    double overlap_squared = 0.0;
    /// Probability of reading the ancilla as 0, (1 + |<a|b>|^2) / 2.
    double p0 = 0.0;
    /// 2 * freq(0) - 1 over the shots, clamped to [0, 1].
    double sampled = 0.0;
    std::size_t shots = 0;
    /// Shots in which the ancilla read 0.
    std::size_t zero_count = 0;
    std::uint64_t seed = 0;
    bool circuit_simulated = false;
};

/// Amplitude k moves to 2^n - 1 - k, i.e. NOT on every qubit: a 180 degree
/// rotation of the encoded image about its centre.
QuantumState rotate_180(QuantumState state);

/// <f| NOT^{(x)n} |f>.
Complex inversion_overlap(const QuantumState& state);

/// Ancilla is qubit 1; register a is qubits 2..n+1, register b n+2..2n+1.
Circuit swap_test_circuit(int n);

/// Samples the ancilla `shots` times from a std::mt19937_64 seeded with
/// `seed`; each draw u = (engine() >> 11) * 2^-53 counts as 0 when u < p0.
/// Errors: DimensionMismatch, InvalidArgument (shots == 0).
OverlapEstimate swap_test(const QuantumState& a, const QuantumState& b, std::size_t shots,
                          std::uint64_t seed);

}  // namespace qpie
