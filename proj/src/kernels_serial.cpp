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

// Reference kernels: visit every basis index, test bits directly.

#include <algorithm>
#include <vector>

#include "qpie/kernels.hpp"

namespace qpie::kernels::serial {

namespace {

std::uint64_t bit_of(unsigned b) { return std::uint64_t{1} << b; }

// Index offset of block row j, targets[0] being the block's most significant bit.
std::uint64_t block_offset(std::size_t j, std::span<const unsigned> targets) {
    std::uint64_t off = 0;
    const std::size_t t = targets.size();
    for (std::size_t p = 0; p < t; ++p) {
        if ((j >> (t - 1 - p)) & 1U) {
            off |= bit_of(targets[p]);
        }
    }
    return off;
}

}  // namespace

void apply_single(std::span<Complex> amps, const Mat2& g, unsigned bit) {
    const std::uint64_t mask = bit_of(bit);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & mask) {
            continue;
        }
        const Complex a0 = amps[k];
        const Complex a1 = amps[k | mask];
        amps[k] = g[0] * a0 + g[1] * a1;
        amps[k | mask] = g[2] * a0 + g[3] * a1;
    }
}

void apply_controlled(std::span<Complex> amps, std::uint64_t control_mask,
                      std::uint64_t control_value, std::span<const unsigned> targets,
                      const ComplexMatrix& block) {
    std::uint64_t target_mask = 0;
    for (unsigned t : targets) {
        target_mask |= bit_of(t);
    }
    const std::size_t dim = block.rows();
    std::vector<std::uint64_t> offsets(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        offsets[j] = block_offset(j, targets);
    }
    std::vector<Complex> in(dim);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & control_mask) != control_value || (k & target_mask) != 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            in[j] = amps[k | offsets[j]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += block(r, c) * in[c];
            }
            amps[k | offsets[r]] = acc;
        }
    }
}

void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b) {
    const std::uint64_t ma = bit_of(bit_a);
    const std::uint64_t mb = bit_of(bit_b);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        // visit each exchanged pair once, from the side with bit_a set
        if ((k & ma) && !(k & mb)) {
            std::swap(amps[k], amps[(k & ~ma) | mb]);
        }
    }
}

void rotate_left(std::span<Complex> amps) {
    if (!amps.empty()) {
        std::rotate(amps.begin(), amps.begin() + 1, amps.end());
    }
}

void reverse(std::span<Complex> amps) { std::reverse(amps.begin(), amps.end()); }

void scale(std::span<Complex> amps, double factor) {
    for (auto& a : amps) {
        a *= factor;
    }
}

double norm_squared(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const auto& a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double outcome_probability(std::span<const Complex> amps, unsigned bit, int outcome) {
    const std::uint64_t mask = bit_of(bit);
    double acc = 0.0;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (((k & mask) != 0) == (outcome != 0)) {
            acc += std::norm(amps[k]);
        }
    }
    return acc;
}

void gather_outcome(std::span<const Complex> in, unsigned bit, int outcome,
                    std::span<Complex> out) {
    const std::uint64_t mask = bit_of(bit);
    std::size_t j = 0;
    for (std::uint64_t k = 0; k < in.size(); ++k) {
        if (((k & mask) != 0) == (outcome != 0)) {
            out[j++] = in[k];
        }
    }
}

void csr_multiply(const CsrView& a, std::span<const double> x, std::span<double> y) {
    for (std::size_t r = 0; r < a.rows; ++r) {
        double acc = 0.0;
        for (std::size_t e = a.row_ptr[r]; e < a.row_ptr[r + 1]; ++e) {
            acc += a.values[e] * x[a.col_idx[e]];
        }
        y[r] = acc;
    }
}

}  // namespace qpie::kernels::serial
