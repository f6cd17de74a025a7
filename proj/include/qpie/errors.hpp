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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpie {

/// Every failure raised by the library carries one of these codes.
enum class ErrorCode {
    // numeric / contract violations
    NotPowerOfTwo,
    ZeroVector,
    NormTooFar,
    BadIndex,
    OverlapError,
    DimensionMismatch,
    NotUnitary,
    ZeroProbability,
    InconsistentShape,
    SplitMismatch,
    TooSmall,
    ShapeMismatch,
    ZeroReference,
    NonFinite,
    // bad input data or arguments
    ZeroImage,
    InvalidArgument,
    UnsupportedFormat,
    CorruptHeader,
    TruncatedData,
    // filesystem
    IoFailure,
};

/// Coarse grouping used for process exit codes.
enum class ErrorCategory { Input, Numeric, Io };

ErrorCategory category_of(ErrorCode code);
std::string_view to_string(ErrorCode code);
std::string_view to_string(ErrorCategory category);

/// Exit status the command-line tool reports for a given category:
/// 2 input, 3 numeric/contract, 4 I/O.
int exit_code_for(ErrorCategory category);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

private:
    ErrorCode code_;
};

}  // namespace qpie
