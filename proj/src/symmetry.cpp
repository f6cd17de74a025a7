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

#include "qpie/symmetry.hpp"

#include <algorithm>
#include <random>

#include "qpie/errors.hpp"
#include "state_access.hpp"

namespace qpie {

QuantumState rotate_180(QuantumState state) {
    kernels::parallel::reverse(detail::StateAccess::amplitudes(state));
    return state;
}

Complex inversion_overlap(const QuantumState& state) {
    return inner_product(state, rotate_180(state));
}

Circuit swap_test_circuit(int n) {
    if (n < 0) {
        throw Error(ErrorCode::BadIndex, "negative register size");
    }
    Circuit c(2 * n + 1);
    const QubitIndex ancilla{1};
    c.add_gate(Gate2x2::hadamard(), ancilla);
    for (int j = 1; j <= n; ++j) {
        c.add_controlled(swap_block(), {ancilla}, Polarity::AllOne,
                         {QubitIndex{1 + j}, QubitIndex{1 + n + j}});
    }
    c.add_gate(Gate2x2::hadamard(), ancilla);
    return c;
}

OverlapEstimate swap_test(const QuantumState& a, const QuantumState& b, std::size_t shots,
                          std::uint64_t seed) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "swap test needs equally sized registers");
    }
    if (shots == 0) {
        throw Error(ErrorCode::InvalidArgument, "swap test needs at least one shot");
    }
    OverlapEstimate est;
    est.analytic = inner_product(a, b);
    est.overlap_squared = std::norm(est.analytic);
    est.shots = shots;
    est.seed = seed;

    const int n = a.num_qubits();
    if (2 * n + 1 <= kMaxSwapTestCircuitQubits) {
        QuantumState joint = tensor(QuantumState::zero_state(1), tensor(a, b));
        joint = run(swap_test_circuit(n), std::move(joint));
        est.p0 = outcome_probability(joint, QubitIndex{1}, 0);
        est.circuit_simulated = true;
    } else {
        est.p0 = 0.5 * (1.0 + est.overlap_squared);
    }
    est.p0 = std::clamp(est.p0, 0.0, 1.0);

    std::mt19937_64 engine(seed);
    std::size_t zeros = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        if (u < est.p0) {
            ++zeros;
        }
    }
    est.zero_count = zeros;
    const double freq0 = static_cast<double>(zeros) / static_cast<double>(shots);
    est.sampled = std::clamp(2.0 * freq0 - 1.0, 0.0, 1.0);
    return est;
}

}  // namespace qpie
