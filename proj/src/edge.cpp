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

#include "qpie/edge.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qpie/errors.hpp"

namespace qpie {

Circuit qhed_circuit(EdgeVariant variant, int n) {
    if (n < 1) {
        throw Error(ErrorCode::TooSmall, "edge detection needs at least one qubit");
    }
    const Gate2x2 h = Gate2x2::hadamard();
    switch (variant) {
        case EdgeVariant::EvenPairs: {
            Circuit c(n);
            c.add_gate(h, QubitIndex{n});
            return c;
        }
        case EdgeVariant::OddPairs: {
            Circuit c(n);
            c.add_rotate_left();
            c.add_gate(h, QubitIndex{n});
            return c;
        }
        case EdgeVariant::AncillaFull: {
            Circuit c(n + 1);
            c.add_gate(h, QubitIndex{n + 1});
            c.add_rotate_left();
            c.add_gate(h, QubitIndex{n + 1});
            return c;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown edge variant");
}

BoundaryResult run_qhed(const EncodingRecord& record, EdgeVariant variant) {
    const int n = record.state.num_qubits();
    const Circuit circuit = qhed_circuit(variant, n);
    QuantumState state = variant == EdgeVariant::AncillaFull
                             ? tensor(record.state, QuantumState::zero_state(1))
                             : record.state;
    state = run(circuit, std::move(state));

    const QubitIndex last{state.num_qubits()};
    BoundaryResult result;
    result.variant = variant;
    result.scan = record.scan;
    result.processing_steps = circuit.size();
    result.success_probability = outcome_probability(state, last, 1);
    result.differences.assign(state.dimension() / 2, Complex{});
    if (result.success_probability < kMinOutcomeProbability) {
        // identical neighbours everywhere: nothing to report
        result.success_probability = 0.0;
        return result;
    }
    const ConditionedState cond = condition_on_qubit(state, last, 1);
    const double amplitude = std::sqrt(cond.probability);
    const auto sub = cond.state.amplitudes();
    for (std::size_t k = 0; k < sub.size(); ++k) {
        result.differences[k] = amplitude * sub[k];
    }
    return result;
}

BoundaryResult qhed_even(const EncodingRecord& record) {
    return run_qhed(record, EdgeVariant::EvenPairs);
}

BoundaryResult qhed_odd(const EncodingRecord& record) {
    return run_qhed(record, EdgeVariant::OddPairs);
}

BoundaryResult qhed_ancilla(const EncodingRecord& record) {
    return run_qhed(record, EdgeVariant::AncillaFull);
}

namespace {

// Signed neighbour differences along one scan, in pixel units, on the grid of
// the vectorized matrix (transposed for row scans).
ImageMatrix scan_differences(const EncodingRecord& record, EdgeMapVariant variant,
                             std::vector<EdgeRunInfo>& runs) {
    const std::size_t count = record.rows * record.cols;
    std::vector<double> pixel_diff(std::size_t{1} << record.state.num_qubits(), 0.0);

    auto note = [&](const BoundaryResult& r) {
        runs.push_back({r.variant, r.scan, r.success_probability, r.processing_steps});
    };
    const double pair_factor = std::numbers::sqrt2 * record.scale;
    if (variant == EdgeMapVariant::Even || variant == EdgeMapVariant::Full) {
        const BoundaryResult r = qhed_even(record);
        for (std::size_t j = 0; j < r.differences.size(); ++j) {
            pixel_diff[2 * j] = r.differences[j].real() * pair_factor;
        }
        note(r);
    }
    if (variant == EdgeMapVariant::Odd || variant == EdgeMapVariant::Full) {
        const BoundaryResult r = qhed_odd(record);
        for (std::size_t j = 0; j < r.differences.size(); ++j) {
            pixel_diff[2 * j + 1] = r.differences[j].real() * pair_factor;
        }
        note(r);
    }
    if (variant == EdgeMapVariant::Ancilla) {
        const BoundaryResult r = qhed_ancilla(record);
        for (std::size_t k = 0; k < r.differences.size(); ++k) {
            pixel_diff[k] = r.differences[k].real() * 2.0 * record.scale;
        }
        note(r);
    }

    // Pair (k, k+1) is a spatial neighbour only inside one column of the
    // vectorized matrix; the last entry of each column pairs with the next
    // column (or wraps to c_0) and is dropped.
    std::vector<double> values(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        if (k % record.rows != record.rows - 1) {
            values[k] = pixel_diff[k];
        }
    }
    return ImageMatrix::from_column_major(record.rows, record.cols, std::move(values));
}

}  // namespace

EdgeMap edge_map(const ImageMatrix& image, EdgeMapVariant variant, EdgeScan scan,
                 double threshold) {
    if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
        throw Error(ErrorCode::InvalidArgument, "threshold must be a finite nonnegative number");
    }
    EdgeMap out;
    std::optional<ImageMatrix> column;
    std::optional<ImageMatrix> row;
    if (scan == EdgeScan::Column || scan == EdgeScan::Both) {
        column = scan_differences(encode(image), variant, out.runs);
    }
    if (scan == EdgeScan::Row || scan == EdgeScan::Both) {
        row = scan_differences(transpose_encode(image), variant, out.runs).transposed();
    }

    if (column && row) {
        ImageMatrix combined(image.rows(), image.cols());
        for (std::size_t j = 0; j < image.cols(); ++j) {
            for (std::size_t i = 0; i < image.rows(); ++i) {
                combined(i, j) = std::hypot((*column)(i, j), (*row)(i, j));
            }
        }
        out.image = std::move(combined);
    } else {
        out.image = column ? std::move(*column) : std::move(*row);
    }

    if (threshold > 0.0) {
        for (double& v : out.image.column_major()) {
            v = std::abs(v) > threshold ? 1.0 : 0.0;
        }
    }
    return out;
}

std::string_view to_string(EdgeVariant v) {
    switch (v) {
        case EdgeVariant::EvenPairs: return "even_pairs";
        case EdgeVariant::OddPairs: return "odd_pairs";
        case EdgeVariant::AncillaFull: return "ancilla_full";
    }
    return "unknown";
}

std::string_view to_string(EdgeMapVariant v) {
    switch (v) {
        case EdgeMapVariant::Even: return "even";
        case EdgeMapVariant::Odd: return "odd";
        case EdgeMapVariant::Full: return "full";
        case EdgeMapVariant::Ancilla: return "ancilla";
    }
    return "unknown";
}

std::string_view to_string(EdgeScan s) {
    switch (s) {
        case EdgeScan::Column: return "column";
        case EdgeScan::Row: return "row";
        case EdgeScan::Both: return "both";
    }
    return "unknown";
}

EdgeMapVariant parse_edge_variant(std::string_view name) {
    if (name == "even") return EdgeMapVariant::Even;
    if (name == "odd") return EdgeMapVariant::Odd;
    if (name == "full") return EdgeMapVariant::Full;
    if (name == "ancilla") return EdgeMapVariant::Ancilla;
    throw Error(ErrorCode::InvalidArgument, "unknown edge variant: " + std::string(name));
}

EdgeScan parse_edge_scan(std::string_view name) {
    if (name == "column") return EdgeScan::Column;
    if (name == "row") return EdgeScan::Row;
    if (name == "both") return EdgeScan::Both;
    throw Error(ErrorCode::InvalidArgument, "unknown edge scan: " + std::string(name));
}

}  // namespace qpie
