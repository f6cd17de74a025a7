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
 * Command execution behind the `qpie` tool. Each command reads its inputs,
 * runs one module pipeline, writes the requested artifacts and produces a
 * JSON report.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpie/edge.hpp"
#include "qpie/image.hpp"
#include "qpie/pgm.hpp"
#include "qpie/symmetry.hpp"
#include "qpie/transforms.hpp"

namespace qpie {

enum class Command { Encode, Transform, Edge, Filter, Symmetry, Compare, Generate };

std::string_view to_string(Command command);

struct PipelineConfig {
    Command command = Command::Encode;
    /// One input image; two for Compare; none for Generate.
    std::vector<std::string> inputs;

    /// Output image (PGM). Empty: none written.
    std::string output_image;
    /// Amplitude CSV dump. Empty: none written.
    std::string amplitudes_csv;
    /// JSON report. Empty or "-": written to the output stream.
    std::string report_json;

    TransformKind transform = TransformKind::Haar;
    EdgeMapVariant edge_variant = EdgeMapVariant::Full;
    EdgeScan edge_scan = EdgeScan::Both;
    std::string mask_path;
    double threshold = 0.0;
    std::size_t shots = 10000;
    std::uint64_t seed = 1;
    double symmetry_threshold = kDefaultSymmetryThreshold;
    /// Multiply decoded amplitudes back to pixel units.
    bool rescale = true;
    /// Unset: each command picks its own rendering.
    std::optional<PixelMapping> mapping;
    PgmEncoding encoding = PgmEncoding::Binary;
    /// Adds wall time to the report; off keeps reports byte-reproducible.
    bool timing = false;

    /// Generate only.
    std::string pattern = "chessboard";
    std::size_t size = 4;
};

/// Test images with levels 0 and 255.
///   chessboard  size x size, 255 where i + j is even
///   edge-test   the fixed 4x4 QHED test image
///   two-region  size x size, a centred disc of 255 on 0
///   ramp        size x size, column j holds round(255 j / (size - 1))
/// Errors: InvalidArgument.
ImageMatrix generate_pattern(std::string_view pattern, std::size_t size);

/// Runs the command; throws qpie::Error on failure.
nlohmann::ordered_json execute(const PipelineConfig& config);

/// execute() plus report output and error mapping. Returns the process exit
/// status: 0, or 2/3/4 by error category after printing
/// "qpie: error[<category>/<code>]: <message>" to `err`.
int run(const PipelineConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qpie
