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
 * Amplitude encoding of images (QPIE): pixel values become normalized
 * amplitudes, pixel positions become basis indices.
 *
 * An M x L image is flattened column by column, k = i + M*j (zero-based), and
 * stored in n = ceil(log2(M*L)) qubits. Indices k >= M*L are zero padding.
 * With M = 2^m and L = 2^l the first l qubits hold the column index and the
 * last m qubits hold the row index.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qpie/image.hpp"
#include "qpie/statevector.hpp"

namespace qpie {

/// Which image axis runs along consecutive basis indices.
enum class ScanOrder {
    Column,  // encode(F): neighbours down a column are adjacent indices
    Row,     // transpose_encode(F): neighbours along a row are adjacent indices
};

struct EncodingRecord {
    QuantumState state;
    /// Shape of the matrix that was vectorized (transposed for ScanOrder::Row).
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// (sum F_ij^2)^(1/2) of the original pixels.
    double scale = 1.0;
    /// Number of trailing zero amplitudes, 2^n - rows*cols.
    std::size_t pad_len = 0;
    ScanOrder scan = ScanOrder::Column;
};

/// Result of decoding: the real parts always, the imaginary parts only when
/// some |Im| exceeds 1e-9.
struct DecodedImage {
    ImageMatrix real;
    std::optional<ImageMatrix> imag;
};

inline constexpr double kImagReportThreshold = 1e-9;

/// ceil(log2(count)), with qubits_for(1) == 0.
int qubits_for(std::size_t count);

/// Column-major flattening.
std::vector<double> vectorize(const ImageMatrix& image);
ImageMatrix reshape(std::span<const double> values, std::size_t rows, std::size_t cols);

/// Errors: ZeroImage (all pixels zero), InvalidArgument (empty), NonFinite.
EncodingRecord encode(const ImageMatrix& image);
/// encode(image.transposed()), tagged ScanOrder::Row.
EncodingRecord transpose_encode(const ImageMatrix& image);

/// Reshapes the first rows*cols amplitudes column-major; multiplies by the
/// record's scale when `rescale` is set. Errors: InconsistentShape.
DecodedImage decode(const EncodingRecord& record, bool rescale);

}  // namespace qpie
