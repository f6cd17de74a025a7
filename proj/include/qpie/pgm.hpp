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
 * File formats of the command-line surface: PGM images (P2 and P5), 3x3
 * mask text files and amplitude CSV dumps.
 */
#pragma once

#include <string>
#include <string_view>

#include "qpie/filtering.hpp"
#include "qpie/image.hpp"
#include "qpie/statevector.hpp"

namespace qpie {

/// Parses P2 or P5 data, maxval up to 65535 (two big-endian bytes per sample
/// above 255). Pixels come back as reals in [0, maxval].
/// Errors: UnsupportedFormat, CorruptHeader, TruncatedData.
ImageMatrix parse_pgm(std::string_view bytes);

/// parse_pgm on a file's contents; IoFailure when it cannot be read.
ImageMatrix read_image(const std::string& path);

enum class PixelMapping {
    /// [min(0, lo), hi] onto 0..255; a constant image maps to one level.
    AutoRescale8,
    /// 0 -> 128, +-max|v| -> 255 / 1; for signed difference images.
    SignedSymmetric,
    /// Rounded and clamped to 0..65535; maxval 255 when everything fits.
    Raw,
};

enum class PgmEncoding { Ascii, Binary };

struct ImageWriteOptions {
    PixelMapping mapping = PixelMapping::AutoRescale8;
    PgmEncoding encoding = PgmEncoding::Binary;
};

/// Errors: NonFinite, InvalidArgument (empty image).
std::string format_pgm(const ImageMatrix& image, const ImageWriteOptions& options = {});

/// Errors: those of format_pgm, IoFailure.
void write_image(const ImageMatrix& image, const std::string& path,
                 const ImageWriteOptions& options = {});

/// Three lines of three whitespace-separated reals; '#' starts a comment.
/// Errors: InvalidArgument, NonFinite.
FilterMask parse_mask(std::string_view text);
FilterMask read_mask(const std::string& path);

/// "index,basis,real,imag" then one row per amplitude; the basis label is the
/// n-bit string with qubit 1 first.
std::string format_amplitudes_csv(const QuantumState& state);
void write_amplitudes_csv(const QuantumState& state, const std::string& path);

/// Shortest round-trip decimal text of a double.
std::string format_double(double value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

PixelMapping parse_pixel_mapping(std::string_view name);
std::string_view to_string(PixelMapping mapping);

}  // namespace qpie
