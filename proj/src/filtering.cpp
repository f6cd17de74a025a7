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

#include "qpie/filtering.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qpie/errors.hpp"

namespace qpie {

FilterMask::FilterMask(const std::array<double, 9>& row_major) : w_(row_major) {
    for (double v : w_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::NonFinite, "mask weights must be finite");
        }
    }
}

FilterMask FilterMask::identity() { return FilterMask({0, 0, 0, 0, 1, 0, 0, 0, 0}); }

FilterMask FilterMask::averaging() {
    const double w = 1.0 / 9.0;
    return FilterMask({w, w, w, w, w, w, w, w, w});
}

SparseOperator::SparseOperator(std::size_t dim, std::vector<std::size_t> row_ptr,
                               std::vector<std::size_t> col_idx, std::vector<double> values)
    : dim_(dim), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
    if (row_ptr_.size() != dim_ + 1 || col_idx_.size() != values_.size() ||
        row_ptr_.back() != values_.size()) {
        throw Error(ErrorCode::InconsistentShape, "malformed CSR arrays");
    }
}

kernels::CsrView SparseOperator::view() const noexcept {
    return {dim_, row_ptr_, col_idx_, values_};
}

double SparseOperator::at(std::size_t row, std::size_t col) const {
    for (std::size_t e = row_ptr_[row]; e < row_ptr_[row + 1]; ++e) {
        if (col_idx_[e] == col) {
            return values_[e];
        }
    }
    return 0.0;
}

ComplexMatrix SparseOperator::to_dense() const {
    ComplexMatrix d(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t e = row_ptr_[r]; e < row_ptr_[r + 1]; ++e) {
            d(r, col_idx_[e]) = values_[e];
        }
    }
    return d;
}

std::vector<double> SparseOperator::apply(std::span<const double> x) const {
    if (x.size() != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "operator and vector sizes differ");
    }
    std::vector<double> y(dim_);
    kernels::parallel::csr_multiply(view(), x, y);
    return y;
}

SparseOperator build_filter_operator(const FilterMask& mask, std::size_t side) {
    if (side < 4) {
        throw Error(ErrorCode::TooSmall, "filter operator needs M >= 4");
    }
    if (!std::has_single_bit(side)) {
        throw Error(ErrorCode::NotPowerOfTwo, "filter side " + std::to_string(side) +
                                                  " is not a power of two");
    }
    const std::size_t dim = side * side;
    std::vector<std::size_t> row_ptr;
    std::vector<std::size_t> col_idx;
    std::vector<double> values;
    row_ptr.reserve(dim + 1);
    col_idx.reserve(9 * dim);
    values.reserve(9 * dim);
    row_ptr.push_back(0);

    // row k = i + M j: block row j, row i inside the block
    for (std::size_t j = 0; j < side; ++j) {
        for (std::size_t i = 0; i < side; ++i) {
            const std::size_t k = i + side * j;
            const bool border = j == 0 || j == side - 1 || i == 0 || i == side - 1;
            if (border) {
                col_idx.push_back(k);
                values.push_back(1.0);
            } else {
                // V_{c+1} sits at block column j-1+c and carries mask column c
                for (std::size_t c = 0; c < 3; ++c) {
                    for (std::size_t r = 0; r < 3; ++r) {
                        const double w = mask.at(r, c);
                        if (w != 0.0) {
                            col_idx.push_back((j - 1 + c) * side + (i - 1 + r));
                            values.push_back(w);
                        }
                    }
                }
            }
            row_ptr.push_back(values.size());
        }
    }
    return SparseOperator(dim, std::move(row_ptr), std::move(col_idx), std::move(values));
}

ImageMatrix apply_filter(const ImageMatrix& image, const FilterMask& mask) {
    if (image.rows() != image.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "spatial filtering needs a square image");
    }
    const SparseOperator op = build_filter_operator(mask, image.rows());
    return ImageMatrix::from_column_major(image.rows(), image.cols(),
                                          op.apply(image.column_major()));
}

bool is_unitary(const SparseOperator& op, double tol) {
    const std::size_t dim = op.dim();
    const auto v = op.view();

    // column-wise copy (row index, value)
    std::vector<std::size_t> col_ptr(dim + 1, 0);
    for (std::size_t e = 0; e < v.col_idx.size(); ++e) {
        ++col_ptr[v.col_idx[e] + 1];
    }
    for (std::size_t c = 0; c < dim; ++c) {
        col_ptr[c + 1] += col_ptr[c];
    }
    std::vector<std::size_t> row_of(v.values.size());
    std::vector<double> val_of(v.values.size());
    std::vector<std::size_t> fill(col_ptr.begin(), col_ptr.end() - 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t e = v.row_ptr[r]; e < v.row_ptr[r + 1]; ++e) {
            const std::size_t slot = fill[v.col_idx[e]]++;
            row_of[slot] = r;
            val_of[slot] = v.values[e];
        }
    }

    // (U^T U)_{a,b} = sum_k U_ka U_kb, accumulated one column a at a time
    std::vector<double> acc(dim, 0.0);
    std::vector<std::size_t> touched;
    for (std::size_t a = 0; a < dim; ++a) {
        touched.clear();
        for (std::size_t s = col_ptr[a]; s < col_ptr[a + 1]; ++s) {
            const std::size_t k = row_of[s];
            for (std::size_t e = v.row_ptr[k]; e < v.row_ptr[k + 1]; ++e) {
                const std::size_t b = v.col_idx[e];
                if (acc[b] == 0.0) {
                    touched.push_back(b);
                }
                acc[b] += val_of[s] * v.values[e];
            }
        }
        bool ok = std::abs(acc[a] - 1.0) <= tol;
        for (std::size_t b : touched) {
            if (b != a && std::abs(acc[b]) > tol) {
                ok = false;
            }
            acc[b] = 0.0;
        }
        acc[a] = 0.0;
        if (!ok) {
            return false;
        }
    }
    return true;
}

}  // namespace qpie
