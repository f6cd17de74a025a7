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

#include "qpie/pgm.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "qpie/errors.hpp"

namespace qpie {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else if (is_space(c)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    /// Next unsigned decimal field. Missing data is TruncatedData when the
    /// input simply ends, CorruptHeader otherwise.
    unsigned long next_number(ErrorCode on_missing, const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) {
            throw Error(on_missing, std::string("unexpected end of data reading ") + what);
        }
        unsigned long value = 0;
        const char* first = bytes_.data() + pos_;
        const char* last = bytes_.data() + bytes_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || (ptr != last && !is_space(*ptr) && *ptr != '#')) {
            throw Error(ErrorCode::CorruptHeader, std::string("malformed ") + what);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t k) { pos_ += k; }
    std::string_view rest() const { return bytes_.substr(pos_); }

    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

std::vector<double> finite_pixels(const ImageMatrix& image) {
    if (image.empty()) {
        throw Error(ErrorCode::InvalidArgument, "cannot write an empty image");
    }
    if (!image.all_finite()) {
        throw Error(ErrorCode::NonFinite, "image has non-finite pixels");
    }
    return {image.column_major().begin(), image.column_major().end()};
}

/// Maps pixels to integer levels and reports the maxval to write.
std::vector<unsigned> quantize(const ImageMatrix& image, PixelMapping mapping, unsigned& maxval) {
    const std::vector<double> px = finite_pixels(image);
    std::vector<unsigned> out(px.size());
    const auto [lo_it, hi_it] = std::minmax_element(px.begin(), px.end());
    switch (mapping) {
        case PixelMapping::AutoRescale8: {
            maxval = 255;
            const double lo = std::min(0.0, *lo_it);
            const double hi = *hi_it;
            for (std::size_t k = 0; k < px.size(); ++k) {
                double level = 0.0;
                if (hi > lo) {
                    level = std::round(255.0 * (px[k] - lo) / (hi - lo));
                } else if (hi > 0.0) {
                    level = 255.0;
                }
                out[k] = static_cast<unsigned>(std::clamp(level, 0.0, 255.0));
            }
            break;
        }
        case PixelMapping::SignedSymmetric: {
            maxval = 255;
            const double a = std::max(std::abs(*lo_it), std::abs(*hi_it));
            for (std::size_t k = 0; k < px.size(); ++k) {
                const double level = a > 0.0 ? std::round(128.0 + 127.0 * px[k] / a) : 128.0;
                out[k] = static_cast<unsigned>(std::clamp(level, 0.0, 255.0));
            }
            break;
        }
        case PixelMapping::Raw: {
            unsigned top = 0;
            for (std::size_t k = 0; k < px.size(); ++k) {
                out[k] = static_cast<unsigned>(std::clamp(std::round(px[k]), 0.0, 65535.0));
                top = std::max(top, out[k]);
            }
            maxval = top > 255 ? 65535 : 255;
            break;
        }
    }
    return out;
}

void append_number(std::string& s, unsigned long v) {
    std::array<char, 24> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    s.append(buf.data(), ptr);
}

}  // namespace

ImageMatrix parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw Error(ErrorCode::UnsupportedFormat, "not a PGM file");
    }
    const bool binary = bytes[1] == '5';
    if (!binary && bytes[1] != '2') {
        throw Error(ErrorCode::UnsupportedFormat,
                    std::string("unsupported netpbm magic P") + bytes[1]);
    }
    HeaderReader in(bytes);
    in.advance(2);
    if (in.pos() < bytes.size() && !HeaderReader::is_space(bytes[in.pos()]) &&
        bytes[in.pos()] != '#') {
        throw Error(ErrorCode::UnsupportedFormat, "bad magic number");
    }
    const unsigned long width = in.next_number(ErrorCode::CorruptHeader, "width");
    const unsigned long height = in.next_number(ErrorCode::CorruptHeader, "height");
    const unsigned long maxval = in.next_number(ErrorCode::CorruptHeader, "maxval");
    if (width == 0 || height == 0) {
        throw Error(ErrorCode::CorruptHeader, "zero image dimension");
    }
    if (maxval == 0 || maxval > 65535) {
        throw Error(ErrorCode::CorruptHeader, "maxval must be in 1..65535");
    }
    if (width > (1ul << 16) || height > (1ul << 16)) {
        throw Error(ErrorCode::CorruptHeader, "image dimensions too large");
    }

    ImageMatrix image(height, width);
    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (in.pos() >= bytes.size() || !HeaderReader::is_space(bytes[in.pos()])) {
            throw Error(ErrorCode::TruncatedData, "missing raster");
        }
        in.advance(1);
        const std::size_t sample = maxval > 255 ? 2 : 1;
        const std::string_view raster = in.rest();
        if (raster.size() < width * height * sample) {
            throw Error(ErrorCode::TruncatedData, "raster shorter than header promises");
        }
        std::size_t p = 0;
        for (std::size_t i = 0; i < height; ++i) {
            for (std::size_t j = 0; j < width; ++j) {
                unsigned v = static_cast<unsigned char>(raster[p++]);
                if (sample == 2) {
                    v = (v << 8) | static_cast<unsigned char>(raster[p++]);
                }
                if (v > maxval) {
                    throw Error(ErrorCode::CorruptHeader, "sample exceeds maxval");
                }
                image(i, j) = v;
            }
        }
    } else {
        for (std::size_t i = 0; i < height; ++i) {
            for (std::size_t j = 0; j < width; ++j) {
                const unsigned long v = in.next_number(ErrorCode::TruncatedData, "pixel");
                if (v > maxval) {
                    throw Error(ErrorCode::CorruptHeader, "sample exceeds maxval");
                }
                image(i, j) = static_cast<double>(v);
            }
        }
    }
    return image;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for reading");
    }
    std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (f.bad()) {
        throw Error(ErrorCode::IoFailure, "read error on '" + path + "'");
    }
    return data;
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    }
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
        throw Error(ErrorCode::IoFailure, "write error on '" + path + "'");
    }
}

ImageMatrix read_image(const std::string& path) { return parse_pgm(read_file(path)); }

std::string format_pgm(const ImageMatrix& image, const ImageWriteOptions& options) {
    unsigned maxval = 255;
    const std::vector<unsigned> levels = quantize(image, options.mapping, maxval);
    const std::size_t rows = image.rows();
    const std::size_t cols = image.cols();

    std::string s = options.encoding == PgmEncoding::Binary ? "P5\n" : "P2\n";
    append_number(s, cols);
    s += ' ';
    append_number(s, rows);
    s += '\n';
    append_number(s, maxval);
    s += '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const unsigned v = levels[i + rows * j];
            if (options.encoding == PgmEncoding::Binary) {
                if (maxval > 255) {
                    s += static_cast<char>((v >> 8) & 0xff);
                }
                s += static_cast<char>(v & 0xff);
            } else {
                if (j > 0) {
                    s += ' ';
                }
                append_number(s, v);
            }
        }
        if (options.encoding == PgmEncoding::Ascii) {
            s += '\n';
        }
    }
    return s;
}

void write_image(const ImageMatrix& image, const std::string& path,
                 const ImageWriteOptions& options) {
    write_file(path, format_pgm(image, options));
}

FilterMask parse_mask(std::string_view text) {
    std::array<double, 9> w{};
    std::size_t count = 0;
    std::size_t line_no = 0;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string tok;
        std::size_t in_line = 0;
        while (fields >> tok) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw Error(ErrorCode::InvalidArgument, "mask entry '" + tok + "' is not a number");
            }
            if (count == 9) {
                throw Error(ErrorCode::InvalidArgument, "mask has more than 9 entries");
            }
            w[count++] = v;
            ++in_line;
        }
        if (in_line == 0) {
            continue;
        }
        if (in_line != 3) {
            throw Error(ErrorCode::InvalidArgument, "each mask line needs exactly 3 entries");
        }
        ++line_no;
    }
    if (count != 9 || line_no != 3) {
        throw Error(ErrorCode::InvalidArgument, "mask needs 3 lines of 3 entries");
    }
    return FilterMask(w);
}

FilterMask read_mask(const std::string& path) { return parse_mask(read_file(path)); }

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec;
    return std::string(buf.data(), ptr);
}

std::string format_amplitudes_csv(const QuantumState& state) {
    const int n = state.num_qubits();
    std::string s = "index,basis,real,imag\n";
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        append_number(s, k);
        s += ',';
        for (int q = n - 1; q >= 0; --q) {
            s += ((k >> q) & 1u) ? '1' : '0';
        }
        s += ',';
        s += format_double(state[k].real());
        s += ',';
        s += format_double(state[k].imag());
        s += '\n';
    }
    return s;
}

void write_amplitudes_csv(const QuantumState& state, const std::string& path) {
    write_file(path, format_amplitudes_csv(state));
}

PixelMapping parse_pixel_mapping(std::string_view name) {
    if (name == "auto") return PixelMapping::AutoRescale8;
    if (name == "signed") return PixelMapping::SignedSymmetric;
    if (name == "raw") return PixelMapping::Raw;
    throw Error(ErrorCode::InvalidArgument, "unknown pixel mapping '" + std::string(name) + "'");
}

std::string_view to_string(PixelMapping mapping) {
    switch (mapping) {
        case PixelMapping::AutoRescale8: return "auto";
        case PixelMapping::SignedSymmetric: return "signed";
        case PixelMapping::Raw: return "raw";
    }
    return "?";
}

}  // namespace qpie
