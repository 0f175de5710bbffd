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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdisc/ensembles.hpp"

namespace qdisc {

/// Coefficients drawn uniformly from [0.05, 1) and normalized.
SymmetricEnsemble random_symmetric(std::size_t n, std::mt19937_64 &rng);

/// Two states with the given overlap in dimension 2, priors (1 +- delta) / 2.
Ensemble two_state_ensemble(double overlap, double delta);

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst_deviation = 0.0;
    double tolerance = 0.0;
    std::size_t cases = 0;
};

/// Closed-form vs oracle suites, seeded. Identical seeds give identical
/// results.
std::vector<SuiteResult> run_verification_suites(std::uint64_t seed);

} // namespace qdisc
