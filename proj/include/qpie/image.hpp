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
#include <initializer_list>
#include <span>
#include <vector>

namespace qpie {

/// M x L real pixel grid, stored column-major so that the storage order is
/// exactly the vectorization order used by the encoder.
class ImageMatrix {
public:
    ImageMatrix() = default;
    ImageMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    /// Builds from row lists, e.g. {{1, 3}, {2, 4}}.
    static ImageMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static ImageMatrix from_rows(const std::vector<std::vector<double>>& rows);
    /// Inverse of vectorize: k = i + rows * j.
    static ImageMatrix from_column_major(std::size_t rows, std::size_t cols,
                                         std::vector<double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i + rows_ * j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i + rows_ * j]; }

    std::span<const double> column_major() const noexcept { return data_; }
    std::span<double> column_major() noexcept { return data_; }

    ImageMatrix transposed() const;
    double frobenius_norm() const;
    bool all_finite() const;

    friend bool operator==(const ImageMatrix&, const ImageMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Zero-pads on the bottom and right up to power-of-two dimensions.
ImageMatrix pad_to_power_of_two(const ImageMatrix& image);

}  // namespace qpie
