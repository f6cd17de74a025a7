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

#include "qpie/circuit.hpp"

#include <algorithm>

#include "qpie/errors.hpp"
#include "state_access.hpp"

namespace qpie {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0) {
        throw Error(ErrorCode::BadIndex, "negative qubit count");
    }
}

void Circuit::check(QubitIndex q) const { (void)bit_position(q, num_qubits_); }

Circuit& Circuit::add_gate(const Gate2x2& g, QubitIndex target) {
    check(target);
    steps_.emplace_back(GateStep{g, target});
    return *this;
}

Circuit& Circuit::add_controlled(ComplexMatrix block, std::vector<QubitIndex> controls,
                                 Polarity polarity, std::vector<QubitIndex> targets) {
    if (targets.empty() || block.rows() != (std::size_t{1} << targets.size()) ||
        !block.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "block dimension does not match target count");
    }
    std::vector<QubitIndex> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    for (QubitIndex q : all) {
        check(q);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorCode::OverlapError, "controls and targets must be disjoint");
    }
    if (!block.is_unitary(kDenseUnitaryTolerance)) {
        throw Error(ErrorCode::NotUnitary, "controlled block is not unitary");
    }
    steps_.emplace_back(ControlledStep{std::move(block), std::move(controls), polarity,
                                       std::move(targets)});
    return *this;
}

Circuit& Circuit::add_swap(QubitIndex a, QubitIndex b) {
    check(a);
    check(b);
    if (a == b) {
        throw Error(ErrorCode::BadIndex, "swap needs two distinct qubits");
    }
    steps_.emplace_back(SwapStep{a, b});
    return *this;
}

Circuit& Circuit::add_cyclic_right_shift(int span) {
    if (span < 1 || span > num_qubits_) {
        throw Error(ErrorCode::BadIndex, "cyclic shift span out of range");
    }
    steps_.emplace_back(PermutationStep{PermutationKind::CyclicRightShift, span});
    return *this;
}

Circuit& Circuit::add_rotate_left() {
    if (num_qubits_ < 1) {
        throw Error(ErrorCode::BadIndex, "amplitude rotation needs at least one qubit");
    }
    steps_.emplace_back(PermutationStep{PermutationKind::RotateLeft, num_qubits_});
    return *this;
}

Circuit& Circuit::append(const Circuit& other, int offset) {
    if (offset < 0 || offset + other.num_qubits() > num_qubits_) {
        throw Error(ErrorCode::BadIndex, "embedded circuit does not fit the register");
    }
    auto shift = [offset](QubitIndex q) { return QubitIndex{q.position + offset}; };
    for (const auto& step : other.steps()) {
        if (const auto* g = std::get_if<GateStep>(&step)) {
            steps_.emplace_back(GateStep{g->gate, shift(g->target)});
        } else if (const auto* c = std::get_if<ControlledStep>(&step)) {
            ControlledStep moved = *c;
            std::transform(moved.controls.begin(), moved.controls.end(), moved.controls.begin(),
                           shift);
            std::transform(moved.targets.begin(), moved.targets.end(), moved.targets.begin(),
                           shift);
            steps_.emplace_back(std::move(moved));
        } else if (const auto* s = std::get_if<SwapStep>(&step)) {
            steps_.emplace_back(SwapStep{shift(s->a), shift(s->b)});
        } else {
            const auto& p = std::get<PermutationStep>(step);
            const bool whole = p.kind == PermutationKind::RotateLeft ||
                               p.kind == PermutationKind::RotateRight;
            if (whole && (offset != 0 || other.num_qubits() != num_qubits_)) {
                throw Error(ErrorCode::InvalidArgument,
                            "amplitude rotation must span the whole register");
            }
            if (!whole && offset != 0) {
                // a shift on qubits offset+1..offset+span is a run of adjacent swaps
                for (int j = p.span - 1; j >= 1; --j) {
                    const int a = p.kind == PermutationKind::CyclicRightShift ? j : p.span - j;
                    steps_.emplace_back(SwapStep{QubitIndex{a + offset}, QubitIndex{a + 1 + offset}});
                }
                continue;
            }
            steps_.emplace_back(p);
        }
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(num_qubits_);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (const auto* g = std::get_if<GateStep>(&*it)) {
            inv.steps_.emplace_back(GateStep{g->gate.adjoint(), g->target});
        } else if (const auto* c = std::get_if<ControlledStep>(&*it)) {
            inv.steps_.emplace_back(
                ControlledStep{c->block.adjoint(), c->controls, c->polarity, c->targets});
        } else if (const auto* s = std::get_if<SwapStep>(&*it)) {
            inv.steps_.emplace_back(*s);
        } else {
            auto p = std::get<PermutationStep>(*it);
            switch (p.kind) {
                case PermutationKind::CyclicRightShift: p.kind = PermutationKind::CyclicLeftShift; break;
                case PermutationKind::CyclicLeftShift: p.kind = PermutationKind::CyclicRightShift; break;
                case PermutationKind::RotateLeft: p.kind = PermutationKind::RotateRight; break;
                case PermutationKind::RotateRight: p.kind = PermutationKind::RotateLeft; break;
            }
            inv.steps_.emplace_back(p);
        }
    }
    return inv;
}

namespace {

struct StepRunner {
    QuantumState& state;

    void operator()(const GateStep& g) const {
        auto& amps = detail::StateAccess::amplitudes(state);
        kernels::parallel::apply_single(amps, g.gate.entries(),
                                        bit_position(g.target, state.num_qubits()));
    }
    void operator()(const ControlledStep& c) const {
        state = apply_controlled(std::move(state), c.block, c.controls, c.polarity, c.targets);
    }
    void operator()(const SwapStep& s) const { state = apply_swap(std::move(state), s.a, s.b); }
    void operator()(const PermutationStep& p) const {
        switch (p.kind) {
            case PermutationKind::CyclicRightShift:
                state = qubit_cyclic_right_shift(std::move(state), p.span);
                break;
            case PermutationKind::CyclicLeftShift:
                state = qubit_cyclic_left_shift(std::move(state), p.span);
                break;
            case PermutationKind::RotateLeft:
                state = amplitude_rotate_left(std::move(state));
                break;
            case PermutationKind::RotateRight:
                state = amplitude_rotate_right(std::move(state));
                break;
        }
    }
};

}  // namespace

QuantumState run(const Circuit& circuit, QuantumState state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "circuit and state sizes differ");
    }
    for (const auto& step : circuit.steps()) {
        std::visit(StepRunner{state}, step);
    }
    detail::check_unit_norm(state, "run");
    return state;
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
    const int n = circuit.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix u(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const QuantumState col = run(circuit, QuantumState::basis_state(n, k));
        for (std::size_t r = 0; r < dim; ++r) {
            u(r, k) = col[r];
        }
    }
    return u;
}

ComplexMatrix swap_block() {
    return ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

}  // namespace qpie
