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
 * Quantum Hadamard edge detection.
 *
 * Adjacent pixels along the scan direction sit at basis indices 2k and 2k+1,
 * which differ only in the last qubit. One Hadamard on that qubit turns each
 * pair into (c_2k + c_2k+1, c_2k - c_2k+1)/sqrt2; projecting the last qubit
 * onto |1> keeps the differences. The odd pairs (2k+1, 2k+2) are reached by
 * rotating the amplitudes left by one first. The ancilla variant duplicates
 * every amplitude into a fresh last qubit, rotates, and gets all cyclic
 * differences (c_k - c_{k+1})/2 from one projection.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "qpie/circuit.hpp"
#include "qpie/encoding.hpp"
#include "qpie/image.hpp"

namespace qpie {

enum class EdgeVariant { EvenPairs, OddPairs, AncillaFull };

struct BoundaryResult {
    /// Un-renormalized differences: sqrt(p) times the conditioned state.
    /// EvenPairs: (c_2k - c_2k+1)/sqrt2, k < 2^(n-1).
    /// OddPairs:  (c_2k+1 - c_2k+2)/sqrt2, the last slot wrapping to c_0.
    /// AncillaFull: (c_k - c_{k+1})/2, k < 2^n, cyclic.
    std::vector<Complex> differences;
    double success_probability = 0.0;
    EdgeVariant variant = EdgeVariant::EvenPairs;
    ScanOrder scan = ScanOrder::Column;
    /// Gate applications after encoding and before measurement.
    std::size_t processing_steps = 0;
};

/// Processing circuit for a variant on an n-qubit image state (n + 1 qubits
/// for AncillaFull, where the ancilla preparation H is included).
Circuit qhed_circuit(EdgeVariant variant, int n);

/// The three variants. A zero outcome probability (no differing neighbours)
/// is not an error: the result carries probability 0 and zero differences.
BoundaryResult qhed_even(const EncodingRecord& record);
BoundaryResult qhed_odd(const EncodingRecord& record);
BoundaryResult qhed_ancilla(const EncodingRecord& record);
BoundaryResult run_qhed(const EncodingRecord& record, EdgeVariant variant);

/// Which pairs an edge map reports.
enum class EdgeMapVariant {
    Even,     // even pairs only
    Odd,      // odd pairs only
    Full,     // even and odd runs combined
    Ancilla,  // single ancilla run
};

enum class EdgeScan { Column, Row, Both };

struct EdgeRunInfo {
    EdgeVariant variant;
    ScanOrder scan;
    double success_probability;
    std::size_t processing_steps;
};

struct EdgeMap {
    /// Column scan: pixel (i, j) holds F(i,j) - F(i+1,j), zero on the last row.
    /// Row scan:    pixel (i, j) holds F(i,j) - F(i,j+1), zero on the last column.
    /// Both:        sqrt(column^2 + row^2).
    /// With a positive threshold the map is binary: 1 where |value| > threshold.
    ImageMatrix image;
    std::vector<EdgeRunInfo> runs;
};

EdgeMap edge_map(const ImageMatrix& image, EdgeMapVariant variant, EdgeScan scan,
                 double threshold = 0.0);

std::string_view to_string(EdgeVariant v);
std::string_view to_string(EdgeMapVariant v);
std::string_view to_string(EdgeScan s);
EdgeMapVariant parse_edge_variant(std::string_view name);
EdgeScan parse_edge_scan(std::string_view name);

}  // namespace qpie
