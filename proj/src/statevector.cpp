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

#include "qpie/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qpie/errors.hpp"
#include "state_access.hpp"

namespace qpie {

namespace kp = kernels::parallel;
using detail::StateAccess;

namespace detail {

void check_unit_norm(const QuantumState& s, const char* where) {
    const double n = s.norm();
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::NormTooFar,
                    std::string(where) + ": norm drifted to " + std::to_string(n));
    }
}

}  // namespace detail

// ---------- Gate2x2 ----------

Gate2x2 Gate2x2::from_matrix(Complex m00, Complex m01, Complex m10, Complex m11) {
    const ComplexMatrix m{{m00, m01}, {m10, m11}};
    if (!m.is_unitary(kGateUnitaryTolerance)) {
        throw Error(ErrorCode::NotUnitary, "2x2 gate is not unitary");
    }
    return Gate2x2({m00, m01, m10, m11});
}

Gate2x2 Gate2x2::hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return Gate2x2({s, s, s, -s});
}

Gate2x2 Gate2x2::pauli_x() { return Gate2x2({0.0, 1.0, 1.0, 0.0}); }

Gate2x2 Gate2x2::phase(double theta) {
    return Gate2x2({1.0, 0.0, 0.0, std::polar(1.0, theta)});
}

ComplexMatrix Gate2x2::matrix() const { return ComplexMatrix{{m_[0], m_[1]}, {m_[2], m_[3]}}; }

Gate2x2 Gate2x2::adjoint() const {
    return Gate2x2({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])});
}

// ---------- QuantumState ----------

QuantumState QuantumState::zero_state(int n) { return basis_state(n, 0); }

QuantumState QuantumState::basis_state(int n, std::uint64_t index) {
    if (n < 0 || n > 40) {
        throw Error(ErrorCode::BadIndex, "qubit count out of range: " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    if (index >= dim) {
        throw Error(ErrorCode::BadIndex, "basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return QuantumState(n, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> values, Normalization mode) {
    if (values.empty() || !std::has_single_bit(values.size())) {
        throw Error(ErrorCode::NotPowerOfTwo,
                    "amplitude count " + std::to_string(values.size()) + " is not a power of two");
    }
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::NonFinite, "non-finite amplitude");
        }
    }
    const double norm = std::sqrt(kp::norm_squared(values));
    if (norm == 0.0) {
        throw Error(ErrorCode::ZeroVector, "all amplitudes are zero");
    }
    const double deviation = std::abs(norm - 1.0);
    if (mode == Normalization::Strict && deviation >= kNormErrorThreshold) {
        throw Error(ErrorCode::NormTooFar,
                    "amplitude norm " + std::to_string(norm) + " is too far from 1");
    }
    if (deviation > kNormTolerance) {
        kp::scale(values, 1.0 / norm);
    }
    const int n = std::countr_zero(values.size());
    return QuantumState(n, std::move(values));
}

double QuantumState::norm() const { return std::sqrt(kp::norm_squared(amps_)); }

// ---------- operations ----------

unsigned bit_position(QubitIndex q, int num_qubits) {
    if (q.position < 1 || q.position > num_qubits) {
        throw Error(ErrorCode::BadIndex, "qubit " + std::to_string(q.position) +
                                             " outside [1, " + std::to_string(num_qubits) + "]");
    }
    return static_cast<unsigned>(num_qubits - q.position);
}

QuantumState apply_gate(QuantumState state, const Gate2x2& g, QubitIndex target) {
    const unsigned bit = bit_position(target, state.num_qubits());
    kp::apply_single(StateAccess::amplitudes(state), g.entries(), bit);
    detail::check_unit_norm(state, "apply_gate");
    return state;
}

QuantumState apply_controlled(QuantumState state, const ComplexMatrix& block,
                              std::span<const QubitIndex> controls, Polarity polarity,
                              std::span<const QubitIndex> targets) {
    const int n = state.num_qubits();
    if (targets.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "controlled gate needs at least one target");
    }
    if (!block.is_square() || block.rows() != (std::size_t{1} << targets.size())) {
        throw Error(ErrorCode::DimensionMismatch, "block dimension does not match target count");
    }
    std::uint64_t control_mask = 0;
    for (QubitIndex c : controls) {
        const std::uint64_t m = std::uint64_t{1} << bit_position(c, n);
        if (control_mask & m) {
            throw Error(ErrorCode::OverlapError, "repeated control qubit");
        }
        control_mask |= m;
    }
    std::vector<unsigned> target_bits;
    std::uint64_t target_mask = 0;
    for (QubitIndex t : targets) {
        const unsigned b = bit_position(t, n);
        const std::uint64_t m = std::uint64_t{1} << b;
        if ((control_mask | target_mask) & m) {
            throw Error(ErrorCode::OverlapError, "controls and targets overlap");
        }
        target_mask |= m;
        target_bits.push_back(b);
    }
    if (!block.is_unitary(kDenseUnitaryTolerance)) {
        throw Error(ErrorCode::NotUnitary, "controlled block is not unitary");
    }
    const std::uint64_t control_value = polarity == Polarity::AllOne ? control_mask : 0;
    kp::apply_controlled(StateAccess::amplitudes(state), control_mask, control_value, target_bits,
                         block);
    detail::check_unit_norm(state, "apply_controlled");
    return state;
}

QuantumState apply_swap(QuantumState state, QubitIndex a, QubitIndex b) {
    const unsigned ba = bit_position(a, state.num_qubits());
    const unsigned bb = bit_position(b, state.num_qubits());
    if (ba == bb) {
        throw Error(ErrorCode::BadIndex, "swap needs two distinct qubits");
    }
    kp::swap_bits(StateAccess::amplitudes(state), ba, bb);
    return state;
}

QuantumState qubit_cyclic_right_shift(QuantumState state, int span) {
    if (span < 1 || span > state.num_qubits()) {
        throw Error(ErrorCode::BadIndex, "cyclic shift span out of range");
    }
    // swaps (s-1, s), (s-2, s-1), ..., (1, 2) carry qubit s's value to the front
    for (int j = span - 1; j >= 1; --j) {
        state = apply_swap(std::move(state), QubitIndex{j}, QubitIndex{j + 1});
    }
    return state;
}

QuantumState qubit_cyclic_left_shift(QuantumState state, int span) {
    if (span < 1 || span > state.num_qubits()) {
        throw Error(ErrorCode::BadIndex, "cyclic shift span out of range");
    }
    for (int j = 1; j <= span - 1; ++j) {
        state = apply_swap(std::move(state), QubitIndex{j}, QubitIndex{j + 1});
    }
    return state;
}

QuantumState amplitude_rotate_left(QuantumState state) {
    kp::rotate_left(StateAccess::amplitudes(state));
    return state;
}

QuantumState amplitude_rotate_right(QuantumState state) {
    auto& amps = StateAccess::amplitudes(state);
    kp::reverse(amps);
    kp::rotate_left(amps);
    kp::reverse(amps);
    return state;
}

double outcome_probability(const QuantumState& state, QubitIndex q, int outcome) {
    const unsigned bit = bit_position(q, state.num_qubits());
    return kp::outcome_probability(state.amplitudes(), bit, outcome);
}

ConditionedState condition_on_qubit(const QuantumState& state, QubitIndex q, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw Error(ErrorCode::InvalidArgument, "measurement outcome must be 0 or 1");
    }
    const unsigned bit = bit_position(q, state.num_qubits());
    const double p = kp::outcome_probability(state.amplitudes(), bit, outcome);
    if (p < kMinOutcomeProbability) {
        throw Error(ErrorCode::ZeroProbability,
                    "outcome " + std::to_string(outcome) + " on qubit " +
                        std::to_string(q.position) + " has zero probability");
    }
    std::vector<Complex> sub(state.dimension() / 2);
    kp::gather_outcome(state.amplitudes(), bit, outcome, sub);
    kp::scale(sub, 1.0 / std::sqrt(p));
    return {StateAccess::adopt(state.num_qubits() - 1, std::move(sub)), p};
}

QuantumState apply_dense_unitary(QuantumState state, const ComplexMatrix& matrix) {
    if (!matrix.is_square() || matrix.rows() != state.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "dense operator does not match state dimension");
    }
    if (!matrix.is_unitary(kDenseUnitaryTolerance)) {
        throw Error(ErrorCode::NotUnitary, "dense operator is not unitary");
    }
    auto out = matrix * state.amplitudes();
    QuantumState result = StateAccess::adopt(state.num_qubits(), std::move(out));
    detail::check_unit_norm(result, "apply_dense_unitary");
    return result;
}

Complex inner_product(const QuantumState& a, const QuantumState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "inner product of states with different sizes");
    }
    return kp::inner_product(a.amplitudes(), b.amplitudes());
}

QuantumState tensor(const QuantumState& high, const QuantumState& low) {
    const auto lo = low.amplitudes();
    const auto hi = high.amplitudes();
    std::vector<Complex> out(hi.size() * lo.size());
    for (std::size_t i = 0; i < hi.size(); ++i) {
        for (std::size_t j = 0; j < lo.size(); ++j) {
            out[i * lo.size() + j] = hi[i] * lo[j];
        }
    }
    return StateAccess::adopt(high.num_qubits() + low.num_qubits(), std::move(out));
}

}  // namespace qpie
