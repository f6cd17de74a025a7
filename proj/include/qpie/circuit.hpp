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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qpie/dense.hpp"
#include "qpie/statevector.hpp"

namespace qpie {

struct GateStep {
    Gate2x2 gate;
    QubitIndex target;
};

struct ControlledStep {
    ComplexMatrix block;
    std::vector<QubitIndex> controls;
    Polarity polarity = Polarity::AllOne;
    std::vector<QubitIndex> targets;
};

struct SwapStep {
    QubitIndex a;
    QubitIndex b;
};

enum class PermutationKind {
    CyclicRightShift,  // on qubits 1..span
    CyclicLeftShift,   // on qubits 1..span
    RotateLeft,        // amplitude index k <- k+1 (mod 2^n), whole register
    RotateRight,       // amplitude index k <- k-1 (mod 2^n), whole register
};

struct PermutationStep {
    PermutationKind kind = PermutationKind::RotateLeft;
    int span = 0;
};

using CircuitStep = std::variant<GateStep, ControlledStep, SwapStep, PermutationStep>;

/// Ordered gate list over a fixed register. Indices are validated on insertion.
class Circuit {
public:
    explicit Circuit(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<CircuitStep>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    Circuit& add_gate(const Gate2x2& g, QubitIndex target);
    Circuit& add_controlled(ComplexMatrix block, std::vector<QubitIndex> controls,
                            Polarity polarity, std::vector<QubitIndex> targets);
    Circuit& add_swap(QubitIndex a, QubitIndex b);
    Circuit& add_cyclic_right_shift(int span);
    Circuit& add_rotate_left();

    /// Appends `other` with its qubit labels shifted by `offset`. Whole-register
    /// amplitude rotations cannot be embedded and throw InvalidArgument.
    Circuit& append(const Circuit& other, int offset = 0);

    /// Adjoint circuit: reversed order, each step inverted.
    Circuit inverse() const;

private:
    void check(QubitIndex q) const;

    int num_qubits_;
    std::vector<CircuitStep> steps_;
};

/// Runs every step in order; norm is checked once at the end.
QuantumState run(const Circuit& circuit, QuantumState state);

/// Column k is run(circuit, |k>). Intended for small registers.
ComplexMatrix circuit_unitary(const Circuit& circuit);

/// 4x4 SWAP matrix in the two-target block convention.
ComplexMatrix swap_block();

}  // namespace qpie
