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
 * Amplitude-level kernels behind the state-vector simulator and the sparse
 * filter operator.
 *
 * Two implementations with identical signatures are provided:
 *
 *  - `kernels::serial` is the reference. Loops run over every basis index and
 *    test bits directly; no index tricks, no threading. Tests compare against
 *    it and the benchmark target uses it as the baseline.
 *  - `kernels::parallel` enumerates only the indices each kernel touches
 *    (zero-bit insertion) and splits the outer loop across OpenMP threads.
 *    Small inputs fall back to a single thread.
 *
 * Bit positions are counted from the least significant bit of the basis
 * index (bit 0). Translating qubit labels to bits is the caller's job.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "qpie/dense.hpp"

namespace qpie::kernels {

/// 2x2 matrix in row-major order: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// Read-only view of a compressed-sparse-row real matrix.
struct CsrView {
    std::size_t rows = 0;
    std::span<const std::size_t> row_ptr;
    std::span<const std::size_t> col_idx;
    std::span<const double> values;
};

// apply_single:        mixes each amplitude pair differing only in `bit`.
// apply_controlled:    applies `block` (dim 2^|targets|) on the subspace where
//                      (index & control_mask) == control_value; targets[0] is
//                      the most significant bit of the block index.
// swap_bits:           exchanges amplitudes whose indices differ by swapping two bits.
// rotate_left:         (a_0, ..., a_{N-1}) -> (a_1, ..., a_{N-1}, a_0).
// reverse:             a_k -> a_{N-1-k}.
// outcome_probability: sum of |a_k|^2 over k whose `bit` equals `outcome`.
// gather_outcome:      out[j] = in[k_j], k_j the j-th index with `bit` == outcome.
// csr_multiply:        y = A x.

namespace serial {
void apply_single(std::span<Complex> amps, const Mat2& g, unsigned bit);
void apply_controlled(std::span<Complex> amps, std::uint64_t control_mask,
                      std::uint64_t control_value, std::span<const unsigned> targets,
                      const ComplexMatrix& block);
void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b);
void rotate_left(std::span<Complex> amps);
void reverse(std::span<Complex> amps);
void scale(std::span<Complex> amps, double factor);
double norm_squared(std::span<const Complex> amps);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double outcome_probability(std::span<const Complex> amps, unsigned bit, int outcome);
void gather_outcome(std::span<const Complex> in, unsigned bit, int outcome,
                    std::span<Complex> out);
void csr_multiply(const CsrView& a, std::span<const double> x, std::span<double> y);
}  // namespace serial

namespace parallel {
void apply_single(std::span<Complex> amps, const Mat2& g, unsigned bit);
void apply_controlled(std::span<Complex> amps, std::uint64_t control_mask,
                      std::uint64_t control_value, std::span<const unsigned> targets,
                      const ComplexMatrix& block);
void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b);
void rotate_left(std::span<Complex> amps);
void reverse(std::span<Complex> amps);
void scale(std::span<Complex> amps, double factor);
double norm_squared(std::span<const Complex> amps);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double outcome_probability(std::span<const Complex> amps, unsigned bit, int outcome);
void gather_outcome(std::span<const Complex> in, unsigned bit, int outcome,
                    std::span<Complex> out);
void csr_multiply(const CsrView& a, std::span<const double> x, std::span<double> y);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
}  // namespace parallel

}  // namespace qpie::kernels
