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

#include "qpie/image.hpp"
#include "qpie/statevector.hpp"

namespace qpie {

struct ComparisonReport {
    double relative_euclidean = 0.0;
    /// |<a|b>| of the two images' encodings.
    double state_fidelity = 0.0;
    double max_abs_error = 0.0;
};

/// ||a - b||_F / ||b||_F. Errors: ShapeMismatch, ZeroReference.
double relative_distance(const ImageMatrix& a, const ImageMatrix& b);

/// |<a|b>|, the pure-state fidelity. Errors: DimensionMismatch.
double state_fidelity(const QuantumState& a, const QuantumState& b);

double max_abs_error(const ImageMatrix& a, const ImageMatrix& b);

/// All three metrics; `reference` plays the role of b.
ComparisonReport compare_images(const ImageMatrix& candidate, const ImageMatrix& reference);

}  // namespace qpie
