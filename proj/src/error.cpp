// Copyright 2026 The qdisc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdisc/error.hpp"

namespace qdisc {

const char *to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotHermitian:
        return "NotHermitian";
    case ErrorCode::NumericalFailure:
        return "NumericalFailure";
    case ErrorCode::SingularInput:
        return "SingularInput";
    case ErrorCode::ZeroCoefficient:
        return "ZeroCoefficient";
    case ErrorCode::BadLength:
        return "BadLength";
    case ErrorCode::InvalidEnsemble:
        return "InvalidEnsemble";
    case ErrorCode::OutOfRange:
        return "OutOfRange";
    case ErrorCode::SingularFrame:
        return "SingularFrame";
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::InfeasibleConfig:
        return "InfeasibleConfig";
    case ErrorCode::LinearlyDependent:
        return "LinearlyDependent";
    }
    return "Unknown";
}

} // namespace qdisc
