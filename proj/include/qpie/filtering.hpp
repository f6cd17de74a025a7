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
 * 3x3 spatial filtering as a sparse linear map on vec(F).
 *
 * For an M x M image the operator U is block tridiagonal in M x M blocks:
 *
 *     U = [ E                 ]      E   = identity
 *         [ V1 V2 V3          ]      V_c = mask column c along the band,
 *         [    .. .. ..       ]            zero first/last rows (V2: unit
 *         [          V1 V2 V3 ]            first/last rows)
 *         [                 E ]
 *
 * Interior pixels receive G_ij = sum_{u,v} w_uv F_{i+u-2, j+v-2}; every pixel
 * on the image border passes through unchanged.
 */
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qpie/dense.hpp"
#include "qpie/image.hpp"
#include "qpie/kernels.hpp"

namespace qpie {

class FilterMask {
public:
    /// Row-major weights w11 w12 w13 w21 ... w33. Throws NonFinite.
    explicit FilterMask(const std::array<double, 9>& row_major);

    static FilterMask identity();
    static FilterMask averaging();

    /// Zero-based: at(u-1, v-1) == w_uv.
    double at(std::size_t row, std::size_t col) const { return w_[row * 3 + col]; }
    const std::array<double, 9>& weights() const noexcept { return w_; }

private:
    std::array<double, 9> w_;
};

/// CSR storage of the filter operator. Zero weights are not stored.
class SparseOperator {
public:
    SparseOperator(std::size_t dim, std::vector<std::size_t> row_ptr,
                   std::vector<std::size_t> col_idx, std::vector<double> values);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }
    std::size_t row_nonzeros(std::size_t row) const { return row_ptr_[row + 1] - row_ptr_[row]; }
    kernels::CsrView view() const noexcept;

    /// Stored value at (row, col), or 0.
    double at(std::size_t row, std::size_t col) const;
    /// Dense copy; for small operators only.
    ComplexMatrix to_dense() const;

    std::vector<double> apply(std::span<const double> x) const;

private:
    std::size_t dim_;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

/// Errors: TooSmall (M < 4), NotPowerOfTwo.
SparseOperator build_filter_operator(const FilterMask& mask, std::size_t side);

/// reshape(U vec(F)). Errors: ShapeMismatch (non-square) plus the builder's.
ImageMatrix apply_filter(const ImageMatrix& image, const FilterMask& mask);

/// Checks U^T U = I within tol using sparse row products.
bool is_unitary(const SparseOperator& op, double tol);

}  // namespace qpie
