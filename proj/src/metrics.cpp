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

#include "qpie/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "qpie/encoding.hpp"
#include "qpie/errors.hpp"

namespace qpie {

namespace {

void require_same_shape(const ImageMatrix& a, const ImageMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "images differ in shape");
    }
}

}  // namespace

double relative_distance(const ImageMatrix& a, const ImageMatrix& b) {
    require_same_shape(a, b);
    const double ref = b.frobenius_norm();
    if (ref == 0.0) {
        throw Error(ErrorCode::ZeroReference, "reference image is all zero");
    }
    const auto pa = a.column_major();
    const auto pb = b.column_major();
    double acc = 0.0;
    for (std::size_t k = 0; k < pa.size(); ++k) {
        const double d = pa[k] - pb[k];
        acc += d * d;
    }
    return std::sqrt(acc) / ref;
}

double state_fidelity(const QuantumState& a, const QuantumState& b) {
    return std::min(1.0, std::abs(inner_product(a, b)));
}

double max_abs_error(const ImageMatrix& a, const ImageMatrix& b) {
    require_same_shape(a, b);
    const auto pa = a.column_major();
    const auto pb = b.column_major();
    double worst = 0.0;
    for (std::size_t k = 0; k < pa.size(); ++k) {
        worst = std::max(worst, std::abs(pa[k] - pb[k]));
    }
    return worst;
}

ComparisonReport compare_images(const ImageMatrix& candidate, const ImageMatrix& reference) {
    ComparisonReport r;
    r.relative_euclidean = relative_distance(candidate, reference);
    r.max_abs_error = max_abs_error(candidate, reference);
    r.state_fidelity = state_fidelity(encode(candidate).state, encode(reference).state);
    return r;
}

}  // namespace qpie
