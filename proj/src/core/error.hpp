// Copyright 2026 The Pastel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace pastel {

// Numeric values are part of the C API and must stay stable.
enum class ErrorCode : int {
    Ok = 0,
    ParseError = 1,
    DuplicateId = 2,
    BadRotation = 3,
    NotConnected = 4,
    EulerMismatch = 5,
    NotStGraph = 6,
    HasDirectedCycle = 7,
    FaceNotGlobular = 8,
    MirroredEmbedding = 9,
    NotComparable = 10,
    NotAPartialOrder = 11,
    NotAdmissible = 12,
    NotGlobularSubgraph = 13,
    NotWideGenerated = 14,
    NotIncluded = 15,
    NotComplete = 16,
    NotMinimalComplete = 17,
    InvalidLabeling = 18,
    BadInclusion = 19,
    NotTwoConnected = 20,
    TooFewFaces = 21,
    HypothesisViolated = 22,
    SearchExhausted = 23,
    OracleFailure = 24,
    Incompatible = 25,
    InvalidCertificate = 26,
    InterchangeViolation = 27,
    InvalidArgument = 28,
    LimitExceeded = 29,
    Internal = 99,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message)
        , code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

// Internal consistency check. Violations are bugs, not user errors.
inline void check(bool condition, const char* what) {
    if (!condition) {
        throw Error(ErrorCode::Internal, std::string("internal check failed: ") + what);
    }
}

} // namespace pastel
