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

/**
 * @file
 * Dense complex state-vector simulator.
 *
 * Qubit labels are 1-based and qubit 1 is the most significant bit of the
 * basis index, so for n qubits k = sum_j i_j * 2^(n-j). Qubit n, "the last
 * qubit", is the least significant bit: amplitudes 2k and 2k+1 differ only
 * in it.
 *
 * States are values. Every operation takes its input state by value and
 * returns the result, so `s = apply_gate(std::move(s), ...)` updates in
 * place without a copy.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpie/dense.hpp"
#include "qpie/kernels.hpp"

namespace qpie {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kNormErrorThreshold = 1e-3;
inline constexpr double kGateUnitaryTolerance = 1e-12;
inline constexpr double kDenseUnitaryTolerance = 1e-10;
inline constexpr double kMinOutcomeProbability = 1e-15;

/// 1-based qubit label; qubit 1 is the most significant bit.
struct QubitIndex {
    int position = 1;

    constexpr QubitIndex() = default;
    constexpr explicit QubitIndex(int p) : position(p) {}

    friend constexpr auto operator<=>(QubitIndex, QubitIndex) = default;
};

/// Validated 2x2 unitary.
class Gate2x2 {
public:
    /// Throws NotUnitary if U^dagger U deviates from I by more than 1e-12.
    static Gate2x2 from_matrix(Complex m00, Complex m01, Complex m10, Complex m11);

    static Gate2x2 hadamard();
    static Gate2x2 pauli_x();
    /// diag(1, e^{i theta}); theta = pi/2 gives the R = diag(1, i) gate.
    static Gate2x2 phase(double theta);

    const kernels::Mat2& entries() const noexcept { return m_; }
    ComplexMatrix matrix() const;
    Gate2x2 adjoint() const;

private:
    explicit Gate2x2(const kernels::Mat2& m) : m_(m) {}
    kernels::Mat2 m_;
};

/// Which control value fires a controlled gate.
enum class Polarity { AllZero, AllOne };

/// How `from_amplitudes` treats a vector whose norm is not 1.
enum class Normalization {
    /// Silent renormalization for drift in (1e-9, 1e-3); NormTooFar beyond.
    Strict,
    /// Always rescale to unit norm.
    Rescale,
};

namespace detail {
struct StateAccess;
}

class QuantumState {
public:
    /// |0...0> on n qubits; n = 0 gives the scalar state (1).
    static QuantumState zero_state(int n);
    static QuantumState basis_state(int n, std::uint64_t index);
    /// Errors: NotPowerOfTwo, ZeroVector, NonFinite, NormTooFar (Strict only).
    static QuantumState from_amplitudes(std::vector<Complex> values,
                                        Normalization mode = Normalization::Strict);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    const Complex& operator[](std::size_t k) const { return amps_[k]; }
    double norm() const;

private:
    friend struct detail::StateAccess;
    QuantumState(int n, std::vector<Complex> amps) : num_qubits_(n), amps_(std::move(amps)) {}

    int num_qubits_ = 0;
    std::vector<Complex> amps_{Complex{1.0}};
};

/// Post-measurement state on the remaining qubits plus the Born probability.
struct ConditionedState {
    QuantumState state;
    double probability = 0.0;
};

/// Bit position (from the LSB) of a qubit label in an n-qubit register.
/// Throws BadIndex when q is outside [1, n].
unsigned bit_position(QubitIndex q, int num_qubits);

QuantumState apply_gate(QuantumState state, const Gate2x2& g, QubitIndex target);

/// Applies `block` to `targets` on the subspace where every control equals the
/// polarity's value. targets[0] is the most significant qubit of the block.
/// Errors: OverlapError, DimensionMismatch, NotUnitary, BadIndex.
QuantumState apply_controlled(QuantumState state, const ComplexMatrix& block,
                              std::span<const QubitIndex> controls, Polarity polarity,
                              std::span<const QubitIndex> targets);

QuantumState apply_swap(QuantumState state, QubitIndex a, QubitIndex b);

/// |i_1 ... i_s> -> |i_s i_1 ... i_{s-1}> on the first `span` qubits, as span-1 swaps.
QuantumState qubit_cyclic_right_shift(QuantumState state, int span);
/// Inverse of qubit_cyclic_right_shift.
QuantumState qubit_cyclic_left_shift(QuantumState state, int span);

/// (a_0, ..., a_{N-1}) -> (a_1, ..., a_{N-1}, a_0).
QuantumState amplitude_rotate_left(QuantumState state);
/// Inverse of amplitude_rotate_left.
QuantumState amplitude_rotate_right(QuantumState state);

double outcome_probability(const QuantumState& state, QubitIndex q, int outcome);

/// Deterministic projection onto `outcome` of qubit q, renormalized.
/// Throws ZeroProbability when the outcome has probability below 1e-15.
ConditionedState condition_on_qubit(const QuantumState& state, QubitIndex q, int outcome);

/// Dense matrix-vector path, for oracle comparisons.
QuantumState apply_dense_unitary(QuantumState state, const ComplexMatrix& matrix);

/// sum_k conj(a_k) b_k.
Complex inner_product(const QuantumState& a, const QuantumState& b);

/// high (x) low: `high` occupies the most significant qubits.
QuantumState tensor(const QuantumState& high, const QuantumState& low);

}  // namespace qpie
