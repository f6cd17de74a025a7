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

#include "qpie/encoding.hpp"

#include <bit>
#include <cmath>

#include "qpie/errors.hpp"

namespace qpie {

int qubits_for(std::size_t count) {
    if (count <= 1) {
        return 0;
    }
    return std::bit_width(count - 1);
}

std::vector<double> vectorize(const ImageMatrix& image) {
    const auto v = image.column_major();
    return {v.begin(), v.end()};
}

ImageMatrix reshape(std::span<const double> values, std::size_t rows, std::size_t cols) {
    return ImageMatrix::from_column_major(rows, cols, {values.begin(), values.end()});
}

EncodingRecord encode(const ImageMatrix& image) {
    if (image.empty()) {
        throw Error(ErrorCode::InvalidArgument, "cannot encode an empty image");
    }
    if (!image.all_finite()) {
        throw Error(ErrorCode::NonFinite, "image contains non-finite pixels");
    }
    const double scale = image.frobenius_norm();
    if (scale == 0.0) {
        throw Error(ErrorCode::ZeroImage, "image has no nonzero pixel");
    }
    const int n = qubits_for(image.size());
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> amps(dim);
    const auto pixels = image.column_major();
    for (std::size_t k = 0; k < pixels.size(); ++k) {
        amps[k] = pixels[k] / scale;
    }
    return EncodingRecord{QuantumState::from_amplitudes(std::move(amps)), image.rows(),
                          image.cols(), scale, dim - image.size(), ScanOrder::Column};
}

EncodingRecord transpose_encode(const ImageMatrix& image) {
    EncodingRecord rec = encode(image.transposed());
    rec.scan = ScanOrder::Row;
    return rec;
}

DecodedImage decode(const EncodingRecord& record, bool rescale) {
    const std::size_t count = record.rows * record.cols;
    if (count == 0 || count > record.state.dimension() ||
        qubits_for(count) != record.state.num_qubits()) {
        throw Error(ErrorCode::InconsistentShape, "record shape does not match its state");
    }
    const double factor = rescale ? record.scale : 1.0;
    const auto amps = record.state.amplitudes();
    std::vector<double> re(count);
    std::vector<double> im(count);
    bool has_imag = false;
    for (std::size_t k = 0; k < count; ++k) {
        re[k] = amps[k].real() * factor;
        im[k] = amps[k].imag() * factor;
        has_imag = has_imag || std::abs(amps[k].imag()) > kImagReportThreshold;
    }
    DecodedImage out{ImageMatrix::from_column_major(record.rows, record.cols, std::move(re)),
                     std::nullopt};
    if (has_imag) {
        out.imag = ImageMatrix::from_column_major(record.rows, record.cols, std::move(im));
    }
    return out;
}

}  // namespace qpie
