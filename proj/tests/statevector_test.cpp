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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qpie/errors.hpp"

using namespace qpie;

namespace {

constexpr double kTol = 1e-12;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no qpie::Error thrown";
    return ErrorCode::IoFailure;
}

double max_state_diff(const QuantumState& a, const ComplexMatrix& v) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) m = std::max(m, std::abs(a[k] - v(k, 0)));
    return m;
}

}  // namespace

TEST(QuantumState, ZeroAndBasisStates) {
    const QuantumState z = QuantumState::zero_state(3);
    EXPECT_EQ(z.dimension(), 8u);
    EXPECT_EQ(z[0], Complex(1.0));
    const QuantumState b = QuantumState::basis_state(3, 5);
    EXPECT_EQ(b[5], Complex(1.0));
    EXPECT_EQ(code_of([] { QuantumState::basis_state(2, 4); }), ErrorCode::BadIndex);
}

TEST(QuantumState, FromAmplitudesValidation) {
    EXPECT_EQ(code_of([] { QuantumState::from_amplitudes({1.0, 0.0, 0.0}); }),
              ErrorCode::NotPowerOfTwo);
    EXPECT_EQ(code_of([] { QuantumState::from_amplitudes({0.0, 0.0}); }), ErrorCode::ZeroVector);
    EXPECT_EQ(code_of([] { QuantumState::from_amplitudes({1.0, 1.0, 1.0, 1.0}); }),
              ErrorCode::NormTooFar);
    EXPECT_EQ(code_of([] { QuantumState::from_amplitudes({NAN, 1.0}); }), ErrorCode::NonFinite);

    const QuantumState r =
        QuantumState::from_amplitudes({1.0, 1.0, 1.0, 1.0}, Normalization::Rescale);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(r[k] - 0.5), 0.0, kTol);

    // tiny drift is silently renormalized
    const QuantumState d = QuantumState::from_amplitudes({1.0 + 1e-7, 0.0});
    EXPECT_NEAR(d.norm(), 1.0, 1e-15);
}

TEST(QuantumState, BitConventionLastQubitIsLeastSignificant) {
    EXPECT_EQ(bit_position(QubitIndex{3}, 3), 0u);
    EXPECT_EQ(bit_position(QubitIndex{1}, 3), 2u);
    EXPECT_EQ(code_of([] { bit_position(QubitIndex{0}, 3); }), ErrorCode::BadIndex);
    EXPECT_EQ(code_of([] { bit_position(QubitIndex{4}, 3); }), ErrorCode::BadIndex);

    const QuantumState s = apply_gate(QuantumState::zero_state(3), Gate2x2::pauli_x(), QubitIndex{3});
    EXPECT_EQ(s[1], Complex(1.0));
}

TEST(QuantumState, SingleGateMatchesKroneckerEmbedding) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n) {
        for (int q = 1; q <= n; ++q) {
            const ComplexMatrix u = oracle::random_unitary2(rng);
            const Gate2x2 g = Gate2x2::from_matrix(u(0, 0), u(0, 1), u(1, 0), u(1, 1));
            const QuantumState s = oracle::random_state(rng, n);
            const QuantumState out = apply_gate(s, g, QubitIndex{q});
            const ComplexMatrix want = oracle::matmul(oracle::embed(u, q, n), oracle::dense(s));
            EXPECT_LE(max_state_diff(out, want), kTol) << "n=" << n << " q=" << q;
        }
    }
}

TEST(QuantumState, NonUnitaryGateRejected) {
    EXPECT_EQ(code_of([] { Gate2x2::from_matrix(1.0, 1.0, 0.0, 1.0); }), ErrorCode::NotUnitary);
}

TEST(QuantumState, ControlledGateMatchesProjectorOracle) {
    std::mt19937_64 rng(12);
    const int n = 4;
    for (Polarity pol : {Polarity::AllOne, Polarity::AllZero}) {
        const ComplexMatrix u = oracle::random_unitary2(rng);
        const std::vector<QubitIndex> controls{QubitIndex{1}, QubitIndex{3}};
        const std::vector<QubitIndex> targets{QubitIndex{4}};
        const unsigned want_bit = pol == Polarity::AllOne ? 1u : 0u;
        ComplexMatrix m(16, 16);
        for (std::uint64_t k = 0; k < 16; ++k) {
            const bool active = oracle::bit_of(k, 1, n) == want_bit && oracle::bit_of(k, 3, n) == want_bit;
            if (!active) {
                m(k, k) = 1.0;
                continue;
            }
            const unsigned t = oracle::bit_of(k, 4, n);
            const std::uint64_t base = k & ~std::uint64_t{1};
            m(base, k) += u(0, t);
            m(base | 1, k) += u(1, t);
        }
        const QuantumState s = oracle::random_state(rng, n);
        const QuantumState out = apply_controlled(s, u, controls, pol, targets);
        EXPECT_LE(max_state_diff(out, oracle::matmul(m, oracle::dense(s))), kTol);
    }
}

TEST(QuantumState, ZeroControlEqualsXConjugation) {
    std::mt19937_64 rng(13);
    const ComplexMatrix u = oracle::random_unitary2(rng);
    const QuantumState s = oracle::random_state(rng, 4);
    const std::vector<QubitIndex> controls{QubitIndex{2}, QubitIndex{4}};
    const std::vector<QubitIndex> targets{QubitIndex{1}};

    QuantumState conj = s;
    for (QubitIndex c : controls) conj = apply_gate(std::move(conj), Gate2x2::pauli_x(), c);
    conj = apply_controlled(std::move(conj), u, controls, Polarity::AllOne, targets);
    for (QubitIndex c : controls) conj = apply_gate(std::move(conj), Gate2x2::pauli_x(), c);

    const QuantumState direct = apply_controlled(s, u, controls, Polarity::AllZero, targets);
    for (std::size_t k = 0; k < s.dimension(); ++k) EXPECT_NEAR(std::abs(direct[k] - conj[k]), 0.0, kTol);
}

TEST(QuantumState, ControlledErrors) {
    const QuantumState s = QuantumState::zero_state(3);
    const ComplexMatrix h = Gate2x2::hadamard().matrix();
    const std::vector<QubitIndex> c1{QubitIndex{1}};
    EXPECT_EQ(code_of([&] { apply_controlled(s, h, c1, Polarity::AllOne, c1); }),
              ErrorCode::OverlapError);
    const std::vector<QubitIndex> t2{QubitIndex{2}, QubitIndex{3}};
    EXPECT_EQ(code_of([&] { apply_controlled(s, h, c1, Polarity::AllOne, t2); }),
              ErrorCode::DimensionMismatch);
    const ComplexMatrix bad = {{1.0, 1.0}, {0.0, 1.0}};
    const std::vector<QubitIndex> t1{QubitIndex{2}};
    EXPECT_EQ(code_of([&] { apply_controlled(s, bad, c1, Polarity::AllOne, t1); }),
              ErrorCode::NotUnitary);
}

TEST(QuantumState, SwapIsInvolutionAndExchangesBits) {
    const QuantumState b = QuantumState::basis_state(3, 0b100);
    const QuantumState s = apply_swap(b, QubitIndex{1}, QubitIndex{3});
    EXPECT_EQ(s[0b001], Complex(1.0));
    std::mt19937_64 rng(14);
    const QuantumState r = oracle::random_state(rng, 4);
    const QuantumState rr = apply_swap(apply_swap(r, QubitIndex{2}, QubitIndex{4}), QubitIndex{2}, QubitIndex{4});
    for (std::size_t k = 0; k < r.dimension(); ++k) EXPECT_EQ(r[k], rr[k]);
}

TEST(QuantumState, CyclicShiftMovesLastQubitOfSpanToFront) {
    const int n = 4;
    for (int span = 1; span <= n; ++span) {
        for (std::uint64_t k = 0; k < 16; ++k) {
            const QuantumState s = qubit_cyclic_right_shift(QuantumState::basis_state(n, k), span);
            // qubit 1 takes the old value of qubit `span`, qubit j+1 the old qubit j
            std::uint64_t want = k;
            for (int q = 1; q <= span; ++q) {
                const int from = q == 1 ? span : q - 1;
                const std::uint64_t bit = oracle::bit_of(k, from, n);
                want = (want & ~(std::uint64_t{1} << (n - q))) | (bit << (n - q));
            }
            EXPECT_EQ(s[want], Complex(1.0)) << "span " << span << " k " << k;
            const QuantumState back = qubit_cyclic_left_shift(s, span);
            EXPECT_EQ(back[k], Complex(1.0));
        }
    }
}

TEST(QuantumState, RotateLeftAndRight) {
    const QuantumState s = QuantumState::from_amplitudes(
        {1.0 / std::sqrt(30.0), 2.0 / std::sqrt(30.0), 3.0 / std::sqrt(30.0), 4.0 / std::sqrt(30.0)});
    const QuantumState l = amplitude_rotate_left(s);
    EXPECT_NEAR(l[0].real(), 2.0 / std::sqrt(30.0), kTol);
    EXPECT_NEAR(l[3].real(), 1.0 / std::sqrt(30.0), kTol);
    const QuantumState r = amplitude_rotate_right(l);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(r[k] - s[k]), 0.0, kTol);
}

TEST(QuantumState, PermutationsAreBijections) {
    const int n = 5;
    const std::size_t dim = 32;
    auto image_of = [&](auto op) {
        std::set<std::size_t> hits;
        for (std::uint64_t k = 0; k < dim; ++k) {
            const QuantumState s = op(QuantumState::basis_state(n, k));
            for (std::size_t j = 0; j < dim; ++j)
                if (std::abs(s[j]) > 0.5) hits.insert(j);
        }
        return hits.size();
    };
    EXPECT_EQ(image_of([](QuantumState s) { return amplitude_rotate_left(std::move(s)); }), dim);
    EXPECT_EQ(image_of([](QuantumState s) { return amplitude_rotate_right(std::move(s)); }), dim);
    EXPECT_EQ(image_of([](QuantumState s) { return qubit_cyclic_right_shift(std::move(s), 4); }), dim);
    EXPECT_EQ(image_of([](QuantumState s) { return qubit_cyclic_left_shift(std::move(s), 5); }), dim);
}

TEST(QuantumState, ConditioningProbabilitiesSumToOne) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 6;
        const QuantumState s = oracle::random_state(rng, n);
        for (int q = 1; q <= n; ++q) {
            const double p0 = outcome_probability(s, QubitIndex{q}, 0);
            const double p1 = outcome_probability(s, QubitIndex{q}, 1);
            EXPECT_NEAR(p0 + p1, 1.0, 1e-12);
            double direct = 0.0;
            for (std::uint64_t k = 0; k < s.dimension(); ++k)
                if (oracle::bit_of(k, q, n) == 1) direct += std::norm(s[k]);
            EXPECT_NEAR(p1, direct, 1e-12);
            if (n > 1) {
                const ConditionedState c = condition_on_qubit(s, QubitIndex{q}, 1);
                EXPECT_EQ(c.state.num_qubits(), n - 1);
                EXPECT_NEAR(c.state.norm(), 1.0, 1e-12);
                EXPECT_NEAR(c.probability, p1, 1e-12);
            }
        }
    }
}

TEST(QuantumState, ConditioningOnImpossibleOutcome) {
    const QuantumState s = QuantumState::zero_state(2);
    EXPECT_EQ(code_of([&] { condition_on_qubit(s, QubitIndex{2}, 1); }), ErrorCode::ZeroProbability);
    EXPECT_EQ(code_of([&] { condition_on_qubit(s, QubitIndex{2}, 2); }), ErrorCode::InvalidArgument);
    const ConditionedState c = condition_on_qubit(s, QubitIndex{1}, 0);
    EXPECT_NEAR(c.probability, 1.0, kTol);
    EXPECT_EQ(c.state[0], Complex(1.0));
}

TEST(QuantumState, NormPreservedUnderRandomOperations) {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 5;
        std::uniform_int_distribution<int> q(1, n);
        QuantumState s = oracle::random_state(rng, n);
        for (int step = 0; step < 30; ++step) {
            const ComplexMatrix u = oracle::random_unitary2(rng);
            const int a = q(rng);
            int b = q(rng);
            if (b == a) b = a % n + 1;
            switch (pick(rng)) {
                case 0: s = apply_gate(std::move(s), Gate2x2::from_matrix(u(0, 0), u(0, 1), u(1, 0), u(1, 1)), QubitIndex{a}); break;
                case 1: {
                    const std::vector<QubitIndex> c{QubitIndex{a}}, t{QubitIndex{b}};
                    s = apply_controlled(std::move(s), u, c, Polarity::AllZero, t);
                    break;
                }
                case 2: s = apply_swap(std::move(s), QubitIndex{a}, QubitIndex{b}); break;
                case 3: s = amplitude_rotate_left(std::move(s)); break;
                default: s = qubit_cyclic_right_shift(std::move(s), a); break;
            }
            ASSERT_NEAR(s.norm(), 1.0, 1e-12);
        }
    }
}

TEST(QuantumState, DenseUnitaryAndTensor) {
    std::mt19937_64 rng(17);
    const QuantumState a = oracle::random_state(rng, 2);
    const QuantumState b = oracle::random_state(rng, 1);
    const QuantumState ab = tensor(a, b);
    const ComplexMatrix want = oracle::kron(oracle::dense(a), oracle::dense(b));
    EXPECT_LE(max_state_diff(ab, want), kTol);

    const ComplexMatrix h3 = oracle::hadamard(8);
    const QuantumState out = apply_dense_unitary(ab, h3);
    EXPECT_LE(max_state_diff(out, oracle::matmul(h3, want)), kTol);
    EXPECT_EQ(code_of([&] { apply_dense_unitary(ab, oracle::hadamard(4)); }), ErrorCode::DimensionMismatch);
    ComplexMatrix bad = oracle::eye(8);
    bad(0, 0) = 2.0;
    EXPECT_EQ(code_of([&] { apply_dense_unitary(ab, bad); }), ErrorCode::NotUnitary);
}

TEST(QuantumState, InnerProductConjugatesFirstArgument) {
    const QuantumState a = QuantumState::from_amplitudes({Complex(0, 1), Complex(0)});
    const QuantumState b = QuantumState::from_amplitudes({Complex(1), Complex(0)});
    EXPECT_NEAR(std::abs(inner_product(a, b) - Complex(0, -1)), 0.0, kTol);
    EXPECT_EQ(code_of([&] { inner_product(a, QuantumState::zero_state(2)); }), ErrorCode::DimensionMismatch);
}
