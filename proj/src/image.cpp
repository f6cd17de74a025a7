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

#include "qpie/image.hpp"

#include <bit>
#include <cmath>

#include "qpie/errors.hpp"

namespace qpie {

ImageMatrix::ImageMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

ImageMatrix ImageMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    for (const auto& r : rows) {
        copy.emplace_back(r);
    }
    return from_rows(copy);
}

ImageMatrix ImageMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t l = m == 0 ? 0 : rows.front().size();
    ImageMatrix out(m, l);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != l) {
            throw Error(ErrorCode::ShapeMismatch, "ragged image rows");
        }
        for (std::size_t j = 0; j < l; ++j) {
            out(i, j) = rows[i][j];
        }
    }
    return out;
}

ImageMatrix ImageMatrix::from_column_major(std::size_t rows, std::size_t cols,
                                           std::vector<double> values) {
    if (values.size() != rows * cols) {
        throw Error(ErrorCode::ShapeMismatch, "value count does not match image shape");
    }
    ImageMatrix out;
    out.rows_ = rows;
    out.cols_ = cols;
    out.data_ = std::move(values);
    return out;
}

ImageMatrix ImageMatrix::transposed() const {
    ImageMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

double ImageMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (double v : data_) {
        acc += v * v;
    }
    return std::sqrt(acc);
}

bool ImageMatrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

ImageMatrix pad_to_power_of_two(const ImageMatrix& image) {
    const std::size_t m = std::bit_ceil(image.rows());
    const std::size_t l = std::bit_ceil(image.cols());
    if (m == image.rows() && l == image.cols()) {
        return image;
    }
    ImageMatrix out(m, l);
    for (std::size_t j = 0; j < image.cols(); ++j) {
        for (std::size_t i = 0; i < image.rows(); ++i) {
            out(i, j) = image(i, j);
        }
    }
    return out;
}

}  // namespace qpie
