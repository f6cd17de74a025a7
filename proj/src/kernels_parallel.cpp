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

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpie/kernels.hpp"

namespace qpie::kernels::parallel {

namespace {

// Below this many outer iterations the fork/join cost dominates.
constexpr std::int64_t kMinParallelWork = std::int64_t{1} << 12;

std::uint64_t bit_of(unsigned b) { return std::uint64_t{1} << b; }

// Spread i so that a zero appears at bit position b.
inline std::uint64_t insert_zero(std::uint64_t i, unsigned b) {
    const std::uint64_t low = i & (bit_of(b) - 1);
    return ((i >> b) << (b + 1)) | low;
}

// `sorted_bits` must be ascending.
inline std::uint64_t insert_zeros(std::uint64_t i, std::span<const unsigned> sorted_bits) {
    for (unsigned b : sorted_bits) {
        i = insert_zero(i, b);
    }
    return i;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void apply_single(std::span<Complex> amps, const Mat2& g, unsigned bit) {
    const std::uint64_t mask = bit_of(bit);
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
    Complex* a = amps.data();
#pragma omp parallel for if (pairs >= kMinParallelWork) schedule(static)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::uint64_t k0 = insert_zero(static_cast<std::uint64_t>(i), bit);
        const std::uint64_t k1 = k0 | mask;
        const Complex a0 = a[k0];
        const Complex a1 = a[k1];
        a[k0] = g[0] * a0 + g[1] * a1;
        a[k1] = g[2] * a0 + g[3] * a1;
    }
}

void apply_controlled(std::span<Complex> amps, std::uint64_t control_mask,
                      std::uint64_t control_value, std::span<const unsigned> targets,
                      const ComplexMatrix& block) {
    std::vector<unsigned> fixed(targets.begin(), targets.end());
    for (unsigned b = 0; b < 64; ++b) {
        if (control_mask & bit_of(b)) {
            fixed.push_back(b);
        }
    }
    std::sort(fixed.begin(), fixed.end());

    const std::size_t dim = block.rows();
    const std::size_t t = targets.size();
    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t p = 0; p < t; ++p) {
            if ((j >> (t - 1 - p)) & 1U) {
                offsets[j] |= bit_of(targets[p]);
            }
        }
    }

    const auto groups = static_cast<std::int64_t>(amps.size() >> fixed.size());
    Complex* a = amps.data();
    const std::span<const unsigned> fixed_bits(fixed);
#pragma omp parallel if (groups >= kMinParallelWork)
    {
        std::vector<Complex> in(dim);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < groups; ++i) {
            const std::uint64_t base =
                insert_zeros(static_cast<std::uint64_t>(i), fixed_bits) | control_value;
            for (std::size_t j = 0; j < dim; ++j) {
                in[j] = a[base | offsets[j]];
            }
            for (std::size_t r = 0; r < dim; ++r) {
                Complex acc = 0.0;
                for (std::size_t c = 0; c < dim; ++c) {
                    acc += block(r, c) * in[c];
                }
                a[base | offsets[r]] = acc;
            }
        }
    }
}

void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b) {
    const unsigned lo = std::min(bit_a, bit_b);
    const unsigned hi = std::max(bit_a, bit_b);
    const std::uint64_t ma = bit_of(bit_a);
    const std::uint64_t mb = bit_of(bit_b);
    const auto quads = static_cast<std::int64_t>(amps.size() / 4);
    Complex* a = amps.data();
#pragma omp parallel for if (quads >= kMinParallelWork) schedule(static)
    for (std::int64_t i = 0; i < quads; ++i) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(i), lo), hi);
        std::swap(a[base | ma], a[base | mb]);
    }
}

void rotate_left(std::span<Complex> amps) {
    const auto n = static_cast<std::int64_t>(amps.size());
    if (n == 0) {
        return;
    }
    std::vector<Complex> tmp(amps.size());
    const Complex* src = amps.data();
#pragma omp parallel for if (n >= kMinParallelWork) schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
        tmp[k] = src[k + 1 == n ? 0 : k + 1];
    }
    std::copy(tmp.begin(), tmp.end(), amps.begin());
}

void reverse(std::span<Complex> amps) {
    const auto n = static_cast<std::int64_t>(amps.size());
    Complex* a = amps.data();
#pragma omp parallel for if (n / 2 >= kMinParallelWork) schedule(static)
    for (std::int64_t k = 0; k < n / 2; ++k) {
        std::swap(a[k], a[n - 1 - k]);
    }
}

void scale(std::span<Complex> amps, double factor) {
    const auto n = static_cast<std::int64_t>(amps.size());
    Complex* a = amps.data();
#pragma omp parallel for if (n >= kMinParallelWork) schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
        a[k] *= factor;
    }
}

double norm_squared(std::span<const Complex> amps) {
    const auto n = static_cast<std::int64_t>(amps.size());
    const Complex* a = amps.data();
    double acc = 0.0;
#pragma omp parallel for if (n >= kMinParallelWork) schedule(static) reduction(+ : acc)
    for (std::int64_t k = 0; k < n; ++k) {
        acc += std::norm(a[k]);
    }
    return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    const auto n = static_cast<std::int64_t>(a.size());
    const Complex* pa = a.data();
    const Complex* pb = b.data();
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for if (n >= kMinParallelWork) schedule(static) reduction(+ : re, im)
    for (std::int64_t k = 0; k < n; ++k) {
        const Complex p = std::conj(pa[k]) * pb[k];
        re += p.real();
        im += p.imag();
    }
    return {re, im};
}

double outcome_probability(std::span<const Complex> amps, unsigned bit, int outcome) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t set = outcome != 0 ? bit_of(bit) : 0;
    const Complex* a = amps.data();
    double acc = 0.0;
#pragma omp parallel for if (half >= kMinParallelWork) schedule(static) reduction(+ : acc)
    for (std::int64_t i = 0; i < half; ++i) {
        acc += std::norm(a[insert_zero(static_cast<std::uint64_t>(i), bit) | set]);
    }
    return acc;
}

void gather_outcome(std::span<const Complex> in, unsigned bit, int outcome,
                    std::span<Complex> out) {
    const auto half = static_cast<std::int64_t>(in.size() / 2);
    const std::uint64_t set = outcome != 0 ? bit_of(bit) : 0;
    const Complex* src = in.data();
    Complex* dst = out.data();
#pragma omp parallel for if (half >= kMinParallelWork) schedule(static)
    for (std::int64_t i = 0; i < half; ++i) {
        dst[i] = src[insert_zero(static_cast<std::uint64_t>(i), bit) | set];
    }
}

void csr_multiply(const CsrView& m, std::span<const double> x, std::span<double> y) {
    const auto rows = static_cast<std::int64_t>(m.rows);
#pragma omp parallel for if (rows >= kMinParallelWork) schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        double acc = 0.0;
        for (std::size_t e = m.row_ptr[r]; e < m.row_ptr[r + 1]; ++e) {
            acc += m.values[e] * x[m.col_idx[e]];
        }
        y[r] = acc;
    }
}

}  // namespace qpie::kernels::parallel
