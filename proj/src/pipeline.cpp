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

#include "qpie/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <new>
#include <ostream>

#include "qpie/encoding.hpp"
#include "qpie/errors.hpp"
#include "qpie/filtering.hpp"
#include "qpie/metrics.hpp"

namespace qpie {

namespace {

using Json = nlohmann::ordered_json;

const std::string& single_input(const PipelineConfig& cfg) {
    if (cfg.inputs.size() != 1) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(to_string(cfg.command)) + " takes exactly one input image");
    }
    return cfg.inputs.front();
}

Json shape_json(const ImageMatrix& image) {
    return Json{{"rows", image.rows()}, {"cols", image.cols()}};
}

Json record_json(const EncodingRecord& r) {
    return Json{{"qubits", r.state.num_qubits()},
                {"rows", r.rows},
                {"cols", r.cols},
                {"scale", r.scale},
                {"pad_len", r.pad_len},
                {"scan", r.scan == ScanOrder::Column ? "column" : "row"}};
}

void emit_image(const PipelineConfig& cfg, const ImageMatrix& image, PixelMapping fallback,
                Json& outputs) {
    if (cfg.output_image.empty()) {
        return;
    }
    const PixelMapping mapping = cfg.mapping.value_or(fallback);
    write_image(image, cfg.output_image, {mapping, cfg.encoding});
    outputs["image"] = cfg.output_image;
    outputs["mapping"] = to_string(mapping);
}

void emit_amplitudes(const PipelineConfig& cfg, const QuantumState& state, Json& outputs) {
    if (cfg.amplitudes_csv.empty()) {
        return;
    }
    write_amplitudes_csv(state, cfg.amplitudes_csv);
    outputs["amplitudes_csv"] = cfg.amplitudes_csv;
}

double max_abs(const ImageMatrix& image) {
    double m = 0.0;
    for (double v : image.column_major()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

Json run_encode(const PipelineConfig& cfg, Json& outputs) {
    const ImageMatrix image = read_image(single_input(cfg));
    const EncodingRecord rec = encode(image);
    const DecodedImage back = decode(rec, cfg.rescale);
    emit_image(cfg, back.real, PixelMapping::AutoRescale8, outputs);
    emit_amplitudes(cfg, rec.state, outputs);
    Json j;
    j["encoding"] = record_json(rec);
    j["norm"] = rec.state.norm();
    if (cfg.rescale) {
        j["roundtrip_max_abs_error"] = max_abs_error(back.real, image);
    }
    return j;
}

Json run_transform(const PipelineConfig& cfg, Json& outputs) {
    const ImageMatrix original = read_image(single_input(cfg));
    const ImageMatrix image = pad_to_power_of_two(original);
    const EncodingRecord rec = encode(image);
    const QubitSplit split = split_for(rec);
    const Circuit circuit = transform_2d_circuit(cfg.transform, split);
    const EncodingRecord out = apply_2d(rec, cfg.transform, split);
    const DecodedImage dec = decode(out, cfg.rescale);

    // Classical reference, in the same units as the decoded image.
    const ComplexMatrix oracle = classical_transform(image, cfg.transform);
    const double unit = cfg.rescale ? 1.0 : 1.0 / rec.scale;
    double worst = 0.0;
    double max_imag = 0.0;
    for (std::size_t i = 0; i < image.rows(); ++i) {
        for (std::size_t jj = 0; jj < image.cols(); ++jj) {
            const Complex got(dec.real(i, jj), dec.imag ? (*dec.imag)(i, jj) : 0.0);
            worst = std::max(worst, std::abs(got - oracle(i, jj) * unit));
            max_imag = std::max(max_imag, std::abs(got.imag()));
        }
    }

    emit_image(cfg, dec.real, PixelMapping::SignedSymmetric, outputs);
    emit_amplitudes(cfg, out.state, outputs);
    Json j;
    j["kind"] = to_string(cfg.transform);
    j["padded"] = image.rows() != original.rows() || image.cols() != original.cols();
    j["encoding"] = record_json(rec);
    j["split"] = Json{{"col_qubits", split.col_qubits}, {"row_qubits", split.row_qubits}};
    j["circuit_steps"] = circuit.size();
    if (cfg.transform == TransformKind::Haar) {
        // A one-pixel axis has no qubits and needs no gates.
        const auto gates = [](int m) { return m > 0 ? haar_elementary_gate_count(m) : 0; };
        j["haar_elementary_gates"] =
            Json{{"col", gates(split.col_qubits)}, {"row", gates(split.row_qubits)}};
    }
    j["max_abs_error_vs_classical"] = worst;
    j["max_abs_imag"] = max_imag;
    return j;
}

Json run_edge(const PipelineConfig& cfg, Json& outputs) {
    const ImageMatrix image = read_image(single_input(cfg));
    const EdgeMap em = edge_map(image, cfg.edge_variant, cfg.edge_scan, cfg.threshold);

    PixelMapping fallback = PixelMapping::SignedSymmetric;
    if (cfg.threshold > 0.0 || cfg.edge_scan == EdgeScan::Both) {
        fallback = PixelMapping::AutoRescale8;
    }
    emit_image(cfg, em.image, fallback, outputs);
    if (!cfg.amplitudes_csv.empty()) {
        emit_amplitudes(cfg, encode(image).state, outputs);
    }

    Json runs = Json::array();
    for (const EdgeRunInfo& r : em.runs) {
        runs.push_back(Json{{"variant", to_string(r.variant)},
                            {"scan", r.scan == ScanOrder::Column ? "column" : "row"},
                            {"success_probability", r.success_probability},
                            {"processing_steps", r.processing_steps}});
    }
    const double floor = 1e-9 * std::max(1.0, max_abs(image));
    std::size_t edge_pixels = 0;
    for (double v : em.image.column_major()) {
        if (std::abs(v) > floor) {
            ++edge_pixels;
        }
    }
    Json j;
    j["variant"] = to_string(cfg.edge_variant);
    j["scan"] = to_string(cfg.edge_scan);
    j["threshold"] = cfg.threshold;
    j["input"] = shape_json(image);
    j["runs"] = std::move(runs);
    j["edge_pixels"] = edge_pixels;
    j["max_abs_value"] = max_abs(em.image);
    return j;
}

Json run_filter(const PipelineConfig& cfg, Json& outputs) {
    if (cfg.mask_path.empty()) {
        throw Error(ErrorCode::InvalidArgument, "filter needs a mask file");
    }
    const ImageMatrix image = read_image(single_input(cfg));
    const FilterMask mask = read_mask(cfg.mask_path);
    const ImageMatrix filtered = apply_filter(image, mask);
    const SparseOperator op = build_filter_operator(mask, image.rows());

    emit_image(cfg, filtered, PixelMapping::AutoRescale8, outputs);
    if (!cfg.amplitudes_csv.empty()) {
        emit_amplitudes(cfg, encode(filtered).state, outputs);
    }
    Json j;
    j["input"] = shape_json(image);
    j["operator_dim"] = op.dim();
    j["operator_nonzeros"] = op.nonzeros();
    j["unitary"] = is_unitary(op, 1e-12);
    if (image.frobenius_norm() > 0.0) {
        j["relative_change"] = relative_distance(filtered, image);
    }
    return j;
}

Json run_symmetry(const PipelineConfig& cfg, Json& outputs) {
    const ImageMatrix image = read_image(single_input(cfg));
    EncodingRecord rec = encode(image);
    const Complex overlap = inversion_overlap(rec.state);
    QuantumState rotated = rotate_180(rec.state);
    const OverlapEstimate est = swap_test(rec.state, rotated, cfg.shots, cfg.seed);

    rec.state = std::move(rotated);
    emit_image(cfg, decode(rec, cfg.rescale).real, PixelMapping::AutoRescale8, outputs);
    emit_amplitudes(cfg, rec.state, outputs);

    Json j;
    j["input"] = shape_json(image);
    j["overlap"] = Json{{"real", overlap.real()}, {"imag", overlap.imag()},
                        {"abs", std::abs(overlap)}};
    j["swap_test"] = Json{{"p0", est.p0},
                          {"overlap_squared", est.overlap_squared},
                          {"sampled_overlap_squared", est.sampled},
                          {"shots", est.shots},
                          {"zero_count", est.zero_count},
                          {"seed", est.seed},
                          {"circuit_simulated", est.circuit_simulated}};
    j["threshold"] = cfg.symmetry_threshold;
    j["symmetric"] = std::abs(overlap) >= cfg.symmetry_threshold;
    return j;
}

Json run_compare(const PipelineConfig& cfg) {
    if (cfg.inputs.size() != 2) {
        throw Error(ErrorCode::InvalidArgument, "compare takes a candidate and a reference image");
    }
    const ImageMatrix a = read_image(cfg.inputs[0]);
    const ImageMatrix b = read_image(cfg.inputs[1]);
    const ComparisonReport r = compare_images(a, b);
    return Json{{"relative_euclidean", r.relative_euclidean},
                {"state_fidelity", r.state_fidelity},
                {"max_abs_error", r.max_abs_error}};
}

Json run_generate(const PipelineConfig& cfg, Json& outputs) {
    if (cfg.output_image.empty()) {
        throw Error(ErrorCode::InvalidArgument, "generate needs an output path");
    }
    const ImageMatrix image = generate_pattern(cfg.pattern, cfg.size);
    emit_image(cfg, image, PixelMapping::Raw, outputs);
    Json j;
    j["pattern"] = cfg.pattern;
    j["image"] = shape_json(image);
    return j;
}

}  // namespace

std::string_view to_string(Command command) {
    switch (command) {
        case Command::Encode: return "encode";
        case Command::Transform: return "transform";
        case Command::Edge: return "edge";
        case Command::Filter: return "filter";
        case Command::Symmetry: return "symmetry";
        case Command::Compare: return "compare";
        case Command::Generate: return "generate";
    }
    return "?";
}

ImageMatrix generate_pattern(std::string_view pattern, std::size_t size) {
    if (pattern == "edge-test") {
        return ImageMatrix::from_rows({{0, 255, 0, 0},
                                       {255, 255, 255, 0},
                                       {255, 255, 255, 255},
                                       {0, 0, 0, 0}});
    }
    if (size == 0 || size > (1u << 14)) {
        throw Error(ErrorCode::InvalidArgument, "pattern size must be in 1..16384");
    }
    ImageMatrix img(size, size);
    if (pattern == "chessboard") {
        for (std::size_t j = 0; j < size; ++j) {
            for (std::size_t i = 0; i < size; ++i) {
                img(i, j) = (i + j) % 2 == 0 ? 255.0 : 0.0;
            }
        }
    } else if (pattern == "two-region") {
        const double c = 0.5 * static_cast<double>(size - 1);
        const double r = 0.3 * static_cast<double>(size);
        for (std::size_t j = 0; j < size; ++j) {
            for (std::size_t i = 0; i < size; ++i) {
                const double di = static_cast<double>(i) - c;
                const double dj = static_cast<double>(j) - c;
                img(i, j) = di * di + dj * dj <= r * r ? 255.0 : 0.0;
            }
        }
    } else if (pattern == "ramp") {
        for (std::size_t j = 0; j < size; ++j) {
            const double v = size > 1 ? std::round(255.0 * static_cast<double>(j) /
                                                   static_cast<double>(size - 1))
                                      : 255.0;
            for (std::size_t i = 0; i < size; ++i) {
                img(i, j) = v;
            }
        }
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown pattern '" + std::string(pattern) + "'");
    }
    return img;
}

nlohmann::ordered_json execute(const PipelineConfig& config) {
    if (!(config.threshold >= 0.0) || !std::isfinite(config.threshold)) {
        throw Error(ErrorCode::InvalidArgument, "threshold must be finite and >= 0");
    }
    const auto start = std::chrono::steady_clock::now();
    Json outputs = Json::object();
    Json body;
    switch (config.command) {
        case Command::Encode: body = run_encode(config, outputs); break;
        case Command::Transform: body = run_transform(config, outputs); break;
        case Command::Edge: body = run_edge(config, outputs); break;
        case Command::Filter: body = run_filter(config, outputs); break;
        case Command::Symmetry: body = run_symmetry(config, outputs); break;
        case Command::Compare: body = run_compare(config); break;
        case Command::Generate: body = run_generate(config, outputs); break;
    }
    Json report;
    report["command"] = to_string(config.command);
    report["inputs"] = config.inputs;
    report["result"] = std::move(body);
    report["outputs"] = std::move(outputs);
    if (config.timing) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        report["wall_time_seconds"] = dt.count();
    }
    return report;
}

int run(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const std::string text = execute(config).dump(2) + "\n";
        if (config.report_json.empty() || config.report_json == "-") {
            out << text;
            out.flush();
        } else {
            write_file(config.report_json, text);
        }
        return 0;
    } catch (const Error& e) {
        err << "qpie: error[" << to_string(e.category()) << '/' << to_string(e.code())
            << "]: " << e.what() << '\n';
        return exit_code_for(e.category());
    } catch (const std::bad_alloc&) {
        err << "qpie: error[numeric/OutOfMemory]: allocation failed\n";
        return exit_code_for(ErrorCategory::Numeric);
    } catch (const std::exception& e) {
        err << "qpie: error[numeric/Internal]: " << e.what() << '\n';
        return exit_code_for(ErrorCategory::Numeric);
    }
}

}  // namespace qpie
