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

#include "qpie/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include "oracles.hpp"
#include "qpie/encoding.hpp"
#include "qpie/errors.hpp"

using namespace qpie;

namespace {

const double kS2 = std::numbers::sqrt2;

ComplexMatrix oracle_for(TransformKind kind, std::size_t dim) {
    switch (kind) {
        case TransformKind::Hadamard: return oracle::hadamard(dim);
        case TransformKind::Fourier: return oracle::dft(dim);
        case TransformKind::Haar: return oracle::haar(dim);
    }
    return {};
}

}  // namespace

TEST(Transforms, FourByFourReferenceMatrices) {
    const ComplexMatrix a4 = {{0.5, 0.5, 0.5, 0.5},
                              {0.5, 0.5, -0.5, -0.5},
                              {kS2 / 2, -kS2 / 2, 0.0, 0.0},
                              {0.0, 0.0, kS2 / 2, -kS2 / 2}};
    const Complex i(0, 1);
    const ComplexMatrix qft4 = {{0.5, 0.5, 0.5, 0.5},
                                {0.5, 0.5 * i, -0.5, -0.5 * i},
                                {0.5, -0.5, 0.5, -0.5},
                                {0.5, -0.5 * i, -0.5, 0.5 * i}};
    EXPECT_LE(oracle::max_diff(haar_matrix(4), a4), 1e-15);
    EXPECT_LE(oracle::max_diff(circuit_unitary(haar_circuit(2)), a4), 1e-12);
    EXPECT_LE(oracle::max_diff(circuit_unitary(qft_circuit(2)), qft4), 1e-12);
    // A_2 is the Hadamard gate
    EXPECT_LE(oracle::max_diff(haar_matrix(2), Gate2x2::hadamard().matrix()), 1e-15);
}

TEST(Transforms, CircuitsMatchOracles) {
    for (int m = 1; m <= 6; ++m) {
        const std::size_t dim = std::size_t{1} << m;
        for (TransformKind k : {TransformKind::Hadamard, TransformKind::Fourier, TransformKind::Haar}) {
            const ComplexMatrix want = oracle_for(k, dim);
            EXPECT_LE(oracle::max_diff(circuit_unitary(transform_circuit(k, m)), want), 1e-10)
                << to_string(k) << " m=" << m;
            EXPECT_LE(oracle::max_diff(transform_matrix(k, dim), want), 1e-12);
        }
        EXPECT_LE(oracle::max_diff(haar_matrix(dim), oracle::haar(dim)), 1e-14);
    }
    EXPECT_THROW(haar_matrix(6), Error);
}

TEST(Transforms, HaarCircuitStructure) {
    // k-fold zero-controlled H for k = 0..m-1, then shifts for k <= m-2
    for (int m = 1; m <= 6; ++m) {
        const Circuit c = haar_circuit(m);
        int hadamards = 0;
        for (const CircuitStep& s : c.steps()) {
            if (const auto* g = std::get_if<ControlledStep>(&s)) {
                if (g->targets.size() == 1) {
                    EXPECT_EQ(g->polarity, Polarity::AllZero);
                    EXPECT_EQ(g->targets[0], QubitIndex{m});
                    EXPECT_EQ(static_cast<int>(g->controls.size()), hadamards);
                    ++hadamards;
                }
            } else if (const auto* g1 = std::get_if<GateStep>(&s)) {
                EXPECT_EQ(hadamards, 0);
                EXPECT_EQ(g1->target, QubitIndex{m});
                ++hadamards;
            }
        }
        EXPECT_EQ(hadamards, m);
    }
}

TEST(Transforms, TwoDimensionalAgreesWithSeparableOracle) {
    std::mt19937_64 rng(31);
    const std::pair<std::size_t, std::size_t> shapes[] = {{4, 4}, {4, 8}, {8, 2}, {1, 8}, {16, 4}};
    for (auto [rows, cols] : shapes) {
        const ImageMatrix f = oracle::random_image(rng, rows, cols);
        ComplexMatrix fm(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) fm(i, j) = f(i, j);
        for (TransformKind k : {TransformKind::Hadamard, TransformKind::Fourier, TransformKind::Haar}) {
            const ComplexMatrix want = oracle::matmul(oracle::matmul(oracle_for(k, rows), fm),
                                                      oracle::transpose(oracle_for(k, cols)));
            const EncodingRecord rec = encode(f);
            const EncodingRecord out = apply_2d(rec, k, split_for(rec));
            const DecodedImage d = decode(out, true);
            double err = 0.0;
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    const Complex got(d.real(i, j), d.imag ? (*d.imag)(i, j) : 0.0);
                    err = std::max(err, std::abs(got - want(i, j)));
                }
            EXPECT_LE(err, 1e-10) << to_string(k) << ' ' << rows << 'x' << cols;
            EXPECT_LE(oracle::max_diff(classical_transform(f, k), want), 1e-12);
            EXPECT_EQ(out.rows, rows);
            EXPECT_NEAR(out.state.norm(), 1.0, 1e-12);
        }
    }
}

TEST(Transforms, HadamardIsSelfInverseAndChessboardConcentrates) {
    // the 4x4 chessboard has all its energy in two Hadamard coefficients
    const ImageMatrix fb = ImageMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}});
    const ComplexMatrix g = classical_transform(fb, TransformKind::Hadamard);
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (std::abs(g(i, j)) > 1e-12) ++nonzero;
    EXPECT_EQ(nonzero, 2);
    const Circuit h = hadamard_circuit(3);
    Circuit twice(3);
    twice.append(h).append(h);
    EXPECT_LE(oracle::max_diff(circuit_unitary(twice), oracle::eye(8)), 1e-12);
}

TEST(Transforms, SplitRequiresPowerOfTwoShape) {
    const EncodingRecord rec = encode(ImageMatrix(3, 4, 1.0));
    EXPECT_THROW(split_for(rec), Error);
    const EncodingRecord ok = encode(ImageMatrix(2, 8, 1.0));
    const QubitSplit s = split_for(ok);
    EXPECT_EQ(s.row_qubits, 1);
    EXPECT_EQ(s.col_qubits, 3);
    EXPECT_THROW(apply_2d(ok, TransformKind::Haar, QubitSplit{2, 2}), Error);
}

TEST(Transforms, ParseNames) {
    EXPECT_EQ(parse_transform_kind("qft"), TransformKind::Fourier);
    EXPECT_EQ(parse_transform_kind("haar"), TransformKind::Haar);
    EXPECT_THROW(parse_transform_kind("wavelet"), Error);
}

TEST(HaarElementary, OnlyElementaryGates) {
    for (int m = 1; m <= 8; ++m) {
        const Circuit c = haar_elementary_circuit(m);
        EXPECT_EQ(c.num_qubits(), m + haar_elementary_ancillas(m));
        for (const CircuitStep& s : c.steps()) {
            if (const auto* g = std::get_if<ControlledStep>(&s)) {
                EXPECT_LE(g->controls.size(), 2u);
                EXPECT_EQ(g->targets.size(), 1u);
                EXPECT_EQ(g->polarity, Polarity::AllOne);
            } else {
                EXPECT_TRUE(std::holds_alternative<GateStep>(s));
            }
        }
    }
}

TEST(HaarElementary, MatchesHaarMatrixWithCleanAncillas) {
    for (int m = 1; m <= 4; ++m) {
        const int a = haar_elementary_ancillas(m);
        const std::size_t dim = std::size_t{1} << m;
        const Circuit c = haar_elementary_circuit(m);
        const ComplexMatrix want = oracle::haar(dim);
        double err = 0.0;
        for (std::size_t x = 0; x < dim; ++x) {
            const QuantumState out = run(c, QuantumState::basis_state(m + a, x << a));
            for (std::size_t k = 0; k < out.dimension(); ++k) {
                const bool clean = (k & ((std::size_t{1} << a) - 1)) == 0;
                const Complex expect = clean ? want(k >> a, x) : Complex{};
                err = std::max(err, std::abs(out[k] - expect));
            }
        }
        EXPECT_LE(err, 1e-10) << "m=" << m;
    }
}

TEST(HaarElementary, ClosedFormCountMatchesBuiltCircuit) {
    std::size_t prev = 0;
    for (int m = 1; m <= 10; ++m) {
        const std::size_t n = haar_elementary_gate_count(m);
        EXPECT_EQ(n, haar_elementary_circuit(m).size()) << "m=" << m;
        EXPECT_GT(n, prev);
        prev = n;
    }
    EXPECT_THROW(haar_elementary_gate_count(0), Error);
}
