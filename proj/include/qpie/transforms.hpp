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
 * Gate-level Hadamard, Fourier and Haar transforms and their 2D application.
 *
 * A separable image transform G = P F Q acts on vec(F) as Q^T (x) P. For the
 * three transforms here Q = P^T with P the M x M transform matrix T_M, so the
 * column register (first l qubits) receives T_L and the row register (last m
 * qubits) receives T_M:
 *
 *     vec(T_M F T_L^T) = (T_L (x) T_M) vec(F).
 *
 * No conjugation is involved for the Fourier case; the DFT matrix is
 * symmetric, so T_L^T = T_L there.
 */
#pragma once

#include <cstddef>
#include <string_view>

#include "qpie/circuit.hpp"
#include "qpie/dense.hpp"
#include "qpie/encoding.hpp"
#include "qpie/image.hpp"

namespace qpie {

enum class TransformKind { Hadamard, Fourier, Haar };

std::string_view to_string(TransformKind kind);
/// Accepts "hadamard", "fourier"/"qft", "haar". Throws InvalidArgument.
TransformKind parse_transform_kind(std::string_view name);

/// Register split of an n-qubit image state: column index in the first
/// (most significant) l qubits, row index in the last m qubits.
struct QubitSplit {
    int col_qubits = 0;
    int row_qubits = 0;
};

/// Split implied by a record whose dimensions are powers of two.
/// Throws SplitMismatch otherwise.
QubitSplit split_for(const EncodingRecord& record);

/// One H per qubit.
Circuit hadamard_circuit(int m);

/// H plus controlled phase rotations plus the final qubit-reversal swaps.
/// The circuit's matrix is the DFT, entries w^{jk} / sqrt(2^m), w = e^{2 pi i / 2^m}.
Circuit qft_circuit(int m);

/// Recursive Haar circuit: for k = 0..m-1, a k-fold zero-controlled H on the
/// last qubit followed (for k <= m-2) by a k-fold zero-controlled cyclic right
/// shift of qubits k+1..m, written as adjacent controlled swaps.
Circuit haar_circuit(int m);

Circuit transform_circuit(TransformKind kind, int m);

/// Haar matrix by the block recursion A_M = [A_{M/2} (x) [1 1]/sqrt2 ; I_{M/2} (x) [1 -1]/sqrt2],
/// A_1 = 1. Throws NotPowerOfTwo.
ComplexMatrix haar_matrix(std::size_t dim);

/// Dense T_dim for the given kind. Throws NotPowerOfTwo.
ComplexMatrix transform_matrix(TransformKind kind, std::size_t dim);

/// Full-register circuit: kind on the column qubits, kind on the row qubits.
Circuit transform_2d_circuit(TransformKind kind, QubitSplit split);

/// Runs the 2D transform circuit on the record's state. Metadata is kept.
/// Throws SplitMismatch when `split` does not describe the record.
EncodingRecord apply_2d(const EncodingRecord& record, TransformKind kind, QubitSplit split);

/// Dense classical reference G = T_M F T_L^T. Throws NotPowerOfTwo.
ComplexMatrix classical_transform(const ImageMatrix& image, TransformKind kind);

/// Haar circuit lowered to 1-qubit gates, CNOT, controlled-H and Toffoli
/// gates. Every k-fold controlled gate is computed through a Toffoli ladder
/// into clean ancillas; each controlled swap becomes three (k+1)-fold
/// controlled NOTs. Data qubits are 1..m, ancillas m+1..m+a with
/// a = max(m-2, 0); ancillas start and end in |0>.
Circuit haar_elementary_circuit(int m);

/// Number of ancillas haar_elementary_circuit(m) appends.
int haar_elementary_ancillas(int m);

/// Size of haar_elementary_circuit(m), computed without building it.
std::size_t haar_elementary_gate_count(int m);

}  // namespace qpie
