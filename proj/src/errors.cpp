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

#include "qpie/errors.hpp"

namespace qpie {

ErrorCategory category_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroImage:
        case ErrorCode::InvalidArgument:
        case ErrorCode::UnsupportedFormat:
        case ErrorCode::CorruptHeader:
        case ErrorCode::TruncatedData:
            return ErrorCategory::Input;
        case ErrorCode::IoFailure:
            return ErrorCategory::Io;
        default:
            return ErrorCategory::Numeric;
    }
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NormTooFar: return "NormTooFar";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::OverlapError: return "OverlapError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::ZeroProbability: return "ZeroProbability";
        case ErrorCode::InconsistentShape: return "InconsistentShape";
        case ErrorCode::SplitMismatch: return "SplitMismatch";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ZeroReference: return "ZeroReference";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::ZeroImage: return "ZeroImage";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::CorruptHeader: return "CorruptHeader";
        case ErrorCode::TruncatedData: return "TruncatedData";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

std::string_view to_string(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Input: return "input";
        case ErrorCategory::Numeric: return "numeric";
        case ErrorCategory::Io: return "io";
    }
    return "unknown";
}

int exit_code_for(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Input: return 2;
        case ErrorCategory::Numeric: return 3;
        case ErrorCategory::Io: return 4;
    }
    return 1;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace qpie
