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

#pragma once

/**
 * @file
 * JSON ensemble files. Two shapes are accepted:
 *
 *   {"kind": "symmetric", "n": 3, "coeffs": [c_0, c_1, c_2]}
 *   {"kind": "explicit", "priors": [...], "states": [[[re, im], ...], ...]}
 *
 * Symmetric coefficients may be unnormalized; the applied scale factor is
 * kept. A document carrying the ensemble under an "ensemble" key (as the
 * compute report does) is accepted too.
 */

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qdisc/ensembles.hpp"

namespace qdisc {

/// Malformed JSON or a schema mismatch. Invariant violations in well-formed
/// input surface as qdisc::Error instead.
class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LoadedEnsemble {
    std::optional<SymmetricEnsemble> symmetric;
    Ensemble ensemble;
    double scale = 1.0; ///< factor applied to input coefficients
};

LoadedEnsemble ensemble_from_json(const nlohmann::json &doc);
/// Parses text; syntax errors become SchemaError with a line number.
LoadedEnsemble ensemble_from_string(const std::string &text);
LoadedEnsemble load_ensemble_file(const std::filesystem::path &path);

/// Loader-compatible form. Symmetric ensembles serialize their normalized
/// coefficients.
nlohmann::json ensemble_to_json(const LoadedEnsemble &loaded);

} // namespace qdisc
