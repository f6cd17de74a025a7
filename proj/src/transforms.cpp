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

#include "qpie/transforms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qpie/errors.hpp"

namespace qpie {

namespace {

void require_qubits(int m, const char* what) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs at least one qubit");
    }
}

std::vector<QubitIndex> qubit_range(int first, int last) {
    std::vector<QubitIndex> out;
    for (int q = first; q <= last; ++q) {
        out.emplace_back(q);
    }
    return out;
}

void require_power_of_two(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw Error(ErrorCode::NotPowerOfTwo,
                    "dimension " + std::to_string(dim) + " is not a power of two");
    }
}

}  // namespace

std::string_view to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::Hadamard: return "hadamard";
        case TransformKind::Fourier: return "fourier";
        case TransformKind::Haar: return "haar";
    }
    return "unknown";
}

TransformKind parse_transform_kind(std::string_view name) {
    if (name == "hadamard") return TransformKind::Hadamard;
    if (name == "fourier" || name == "qft") return TransformKind::Fourier;
    if (name == "haar") return TransformKind::Haar;
    throw Error(ErrorCode::InvalidArgument, "unknown transform kind: " + std::string(name));
}

QubitSplit split_for(const EncodingRecord& record) {
    if (!std::has_single_bit(record.rows) || !std::has_single_bit(record.cols)) {
        throw Error(ErrorCode::SplitMismatch,
                    "2D transforms need power-of-two image dimensions; pad the image first");
    }
    return {std::countr_zero(record.cols), std::countr_zero(record.rows)};
}

Circuit hadamard_circuit(int m) {
    require_qubits(m, "hadamard_circuit");
    Circuit c(m);
    for (int q = 1; q <= m; ++q) {
        c.add_gate(Gate2x2::hadamard(), QubitIndex{q});
    }
    return c;
}

Circuit qft_circuit(int m) {
    require_qubits(m, "qft_circuit");
    Circuit c(m);
    for (int j = 1; j <= m; ++j) {
        c.add_gate(Gate2x2::hadamard(), QubitIndex{j});
        for (int k = j + 1; k <= m; ++k) {
            // R_d = diag(1, e^{2 pi i / 2^d}), d = k - j + 1; R_2 = diag(1, i)
            const double theta = 2.0 * std::numbers::pi / std::ldexp(1.0, k - j + 1);
            c.add_controlled(Gate2x2::phase(theta).matrix(), {QubitIndex{k}}, Polarity::AllOne,
                             {QubitIndex{j}});
        }
    }
    for (int j = 1; j <= m / 2; ++j) {
        c.add_swap(QubitIndex{j}, QubitIndex{m + 1 - j});
    }
    return c;
}

Circuit haar_circuit(int m) {
    require_qubits(m, "haar_circuit");
    Circuit c(m);
    const QubitIndex last{m};
    for (int k = 0; k < m; ++k) {
        const auto controls = qubit_range(1, k);
        if (k == 0) {
            c.add_gate(Gate2x2::hadamard(), last);
        } else {
            c.add_controlled(Gate2x2::hadamard().matrix(), controls, Polarity::AllZero, {last});
        }
        if (k > m - 2) {
            continue;
        }
        // S on qubits k+1..m: |i_{k+1} ... i_m> -> |i_m i_{k+1} ... i_{m-1}>
        for (int j = m - 1; j >= k + 1; --j) {
            if (k == 0) {
                c.add_swap(QubitIndex{j}, QubitIndex{j + 1});
            } else {
                c.add_controlled(swap_block(), controls, Polarity::AllZero,
                                 {QubitIndex{j}, QubitIndex{j + 1}});
            }
        }
    }
    return c;
}

Circuit transform_circuit(TransformKind kind, int m) {
    switch (kind) {
        case TransformKind::Hadamard: return hadamard_circuit(m);
        case TransformKind::Fourier: return qft_circuit(m);
        case TransformKind::Haar: return haar_circuit(m);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown transform kind");
}

ComplexMatrix haar_matrix(std::size_t dim) {
    require_power_of_two(dim);
    const double s = 1.0 / std::numbers::sqrt2;
    ComplexMatrix a{{1.0}};
    for (std::size_t size = 2; size <= dim; size *= 2) {
        const std::size_t half = size / 2;
        ComplexMatrix next(size, size);
        // top half: A_{size/2} (x) [1 1]/sqrt2
        for (std::size_t r = 0; r < half; ++r) {
            for (std::size_t c = 0; c < half; ++c) {
                next(r, 2 * c) = a(r, c) * s;
                next(r, 2 * c + 1) = a(r, c) * s;
            }
        }
        // bottom half: I_{size/2} (x) [1 -1]/sqrt2
        for (std::size_t r = 0; r < half; ++r) {
            next(half + r, 2 * r) = s;
            next(half + r, 2 * r + 1) = -s;
        }
        a = std::move(next);
    }
    return a;
}

ComplexMatrix transform_matrix(TransformKind kind, std::size_t dim) {
    require_power_of_two(dim);
    switch (kind) {
        case TransformKind::Hadamard: {
            const double s = 1.0 / std::sqrt(static_cast<double>(dim));
            ComplexMatrix h(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) {
                for (std::size_t c = 0; c < dim; ++c) {
                    h(r, c) = (std::popcount(r & c) % 2 == 0) ? s : -s;
                }
            }
            return h;
        }
        case TransformKind::Fourier: {
            const double s = 1.0 / std::sqrt(static_cast<double>(dim));
            ComplexMatrix f(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) {
                for (std::size_t c = 0; c < dim; ++c) {
                    // reduce the exponent first so large dims keep full phase accuracy
                    const std::size_t e = (r * c) % dim;
                    f(r, c) = std::polar(s, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                                static_cast<double>(dim));
                }
            }
            return f;
        }
        case TransformKind::Haar:
            return haar_matrix(dim);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown transform kind");
}

Circuit transform_2d_circuit(TransformKind kind, QubitSplit split) {
    if (split.col_qubits < 0 || split.row_qubits < 0) {
        throw Error(ErrorCode::SplitMismatch, "negative qubit split");
    }
    Circuit c(split.col_qubits + split.row_qubits);
    if (split.col_qubits > 0) {
        c.append(transform_circuit(kind, split.col_qubits), 0);
    }
    if (split.row_qubits > 0) {
        c.append(transform_circuit(kind, split.row_qubits), split.col_qubits);
    }
    return c;
}

EncodingRecord apply_2d(const EncodingRecord& record, TransformKind kind, QubitSplit split) {
    const QubitSplit expected = split_for(record);
    if (split.col_qubits != expected.col_qubits || split.row_qubits != expected.row_qubits ||
        split.col_qubits + split.row_qubits != record.state.num_qubits()) {
        throw Error(ErrorCode::SplitMismatch, "qubit split does not match the encoded image");
    }
    EncodingRecord out = record;
    out.state = run(transform_2d_circuit(kind, split), record.state);
    return out;
}

ComplexMatrix classical_transform(const ImageMatrix& image, TransformKind kind) {
    require_power_of_two(image.rows());
    require_power_of_two(image.cols());
    ComplexMatrix f(image.rows(), image.cols());
    for (std::size_t i = 0; i < image.rows(); ++i) {
        for (std::size_t j = 0; j < image.cols(); ++j) {
            f(i, j) = image(i, j);
        }
    }
    const ComplexMatrix p = transform_matrix(kind, image.rows());
    const ComplexMatrix q = transform_matrix(kind, image.cols()).transpose();
    return p * f * q;
}

// ---------- elementary decomposition ----------

namespace {

// Lowers a multi-controlled single-qubit U. Zero-polarity controls are
// conjugated with X; the remaining AND is built by a Toffoli ladder.
class ElementaryBuilder {
public:
    ElementaryBuilder(Circuit& c, int first_ancilla) : c_(c), first_ancilla_(first_ancilla) {}

    void controlled(const Gate2x2& u, bool u_is_x, const std::vector<QubitIndex>& zero_controls,
                    const std::vector<QubitIndex>& one_controls, QubitIndex target) {
        for (QubitIndex q : zero_controls) {
            c_.add_gate(Gate2x2::pauli_x(), q);
        }
        std::vector<QubitIndex> ctl = zero_controls;
        ctl.insert(ctl.end(), one_controls.begin(), one_controls.end());
        const std::size_t n = ctl.size();

        if (n == 0) {
            c_.add_gate(u, target);
        } else if (n == 1) {
            c_.add_controlled(u.matrix(), {ctl[0]}, Polarity::AllOne, {target});
        } else if (u_is_x && n == 2) {
            toffoli(ctl[0], ctl[1], target);
        } else {
            // AND of the first `ladder` controls lands in ancilla(ladder - 2)
            const std::size_t ladder = u_is_x ? n - 1 : n;
            compute_and(ctl, ladder);
            const QubitIndex acc = ancilla(ladder - 2);
            if (u_is_x) {
                toffoli(acc, ctl[n - 1], target);
            } else {
                c_.add_controlled(u.matrix(), {acc}, Polarity::AllOne, {target});
            }
            uncompute_and(ctl, ladder);
        }

        for (QubitIndex q : zero_controls) {
            c_.add_gate(Gate2x2::pauli_x(), q);
        }
    }

private:
    QubitIndex ancilla(std::size_t i) const { return QubitIndex{first_ancilla_ + static_cast<int>(i)}; }

    void toffoli(QubitIndex a, QubitIndex b, QubitIndex t) {
        c_.add_controlled(Gate2x2::pauli_x().matrix(), {a, b}, Polarity::AllOne, {t});
    }

    void compute_and(const std::vector<QubitIndex>& ctl, std::size_t count) {
        toffoli(ctl[0], ctl[1], ancilla(0));
        for (std::size_t i = 2; i < count; ++i) {
            toffoli(ctl[i], ancilla(i - 2), ancilla(i - 1));
        }
    }

    void uncompute_and(const std::vector<QubitIndex>& ctl, std::size_t count) {
        for (std::size_t i = count; i-- > 2;) {
            toffoli(ctl[i], ancilla(i - 2), ancilla(i - 1));
        }
        toffoli(ctl[0], ctl[1], ancilla(0));
    }

    Circuit& c_;
    int first_ancilla_;
};

// Gate count of ElementaryBuilder::controlled for `zeros` zero-polarity and
// `ones` one-polarity controls.
std::size_t lowered_cost(bool u_is_x, std::size_t zeros, std::size_t ones) {
    const std::size_t n = zeros + ones;
    std::size_t core = 0;
    if (n <= 1 || (u_is_x && n == 2)) {
        core = 1;
    } else {
        const std::size_t ladder = u_is_x ? n - 1 : n;
        core = 2 * (ladder - 1) + 1;
    }
    return 2 * zeros + core;
}

}  // namespace

int haar_elementary_ancillas(int m) { return m > 2 ? m - 2 : 0; }

Circuit haar_elementary_circuit(int m) {
    require_qubits(m, "haar_elementary_circuit");
    Circuit c(m + haar_elementary_ancillas(m));
    ElementaryBuilder b(c, m + 1);
    const QubitIndex last{m};
    const Gate2x2 h = Gate2x2::hadamard();
    const Gate2x2 x = Gate2x2::pauli_x();
    for (int k = 0; k < m; ++k) {
        const auto controls = qubit_range(1, k);
        b.controlled(h, false, controls, {}, last);
        if (k > m - 2) {
            continue;
        }
        for (int j = m - 1; j >= k + 1; --j) {
            // controlled SWAP(j, j+1) as three controlled NOTs
            const QubitIndex p{j};
            const QubitIndex q{j + 1};
            b.controlled(x, true, controls, {q}, p);
            b.controlled(x, true, controls, {p}, q);
            b.controlled(x, true, controls, {q}, p);
        }
    }
    return c;
}

std::size_t haar_elementary_gate_count(int m) {
    require_qubits(m, "haar_elementary_gate_count");
    std::size_t total = 0;
    for (int k = 0; k < m; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        total += lowered_cost(false, kk, 0);
        if (k <= m - 2) {
            total += 3 * static_cast<std::size_t>(m - k - 1) * lowered_cost(true, kk, 1);
        }
    }
    return total;
}

}  // namespace qpie
