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
 * Brute-force verifiers for the closed forms in measures.hpp. None of these
 * share a code path with the formulas they check: the USD oracle searches the
 * feasible region directly, the random search samples POVMs, and the entropy
 * oracle diagonalizes the density operator.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdisc/ensembles.hpp"
#include "qdisc/numerics.hpp"

namespace qdisc {

struct UsdSolution {
    std::vector<double> conclusive_probs; ///< P_j = <psi_j|E_j|psi_j>
    double average = 0.0;                 ///< sum_j p_j P_j
    double inconclusive_min_eig = 0.0;    ///< of I - sum_j E_j
};

/// Normalized |phi_j> with <phi_j|psi_k> = 0 for k != j, taken from the dual
/// frame sum_k (G^{-1})_{kj} |psi_k>. Throws LinearlyDependent.
std::vector<PureState> reciprocal_states(const Ensemble &e);

/// Maximizes sum_j p_j P_j over conclusive elements
/// E_j = P_j |phi_j><phi_j| / |<phi_j|psi_j>|^2 subject to I - sum_j E_j >= 0.
///
/// Hill-climb from the largest feasible uniform point: each round repeatedly
/// steps along the uniform direction and each coordinate while the
/// inconclusive operator stays PSD, then halves the step (0.1 initially).
/// A log-barrier Newton solve of the same problem runs alongside; the better
/// feasible point is returned. Throws LinearlyDependent.
UsdSolution usd_oracle(const Ensemble &e, std::size_t refinement_steps,
                       const Tolerance &tol = {});

/// Best-so-far success probability after each of `trials` random POVMs. Trial
/// i draws its operators from a generator seeded with seed + i.
std::vector<double> hyp_random_search_history(const Ensemble &e,
                                              std::size_t trials,
                                              std::uint64_t seed);

/// Lower bound on the minimum-error success probability; 0 when trials = 0.
double hyp_random_search(const Ensemble &e, std::size_t trials,
                         std::uint64_t seed);

/// Von Neumann entropy in bits of sum_j p_j |psi_j><psi_j|.
double entropy_oracle(const Ensemble &e);

} // namespace qdisc
