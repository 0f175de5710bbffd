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

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qdisc/ensembles.hpp"

namespace qdisc {

/// Margin both inequalities must clear before a pair counts as a reversal.
inline constexpr double kReversalMargin = 1e-12;

/// A pair ordered one way by P_USD and the opposite way by P_HYP:
/// p_usd_2 < p_usd_1 while p_hyp_2 > p_hyp_1.
struct ReversalWitness {
    SymmetricEnsemble e1;
    SymmetricEnsemble e2;
    double p_usd_1;
    double p_usd_2;
    double p_hyp_1;
    double p_hyp_2;
    double epsilon; ///< p_usd_1 - p_usd_2
};

/// E1 saturates the lower bound at p_usd_1 (n0 = n - 1); E2 saturates the
/// upper bound at p_usd_1 - epsilon (n0 = 1). Throws OutOfRange unless
/// 0 < epsilon <= p_usd_1 <= 1 and n >= 3.
std::pair<SymmetricEnsemble, SymmetricEnsemble>
build_candidate_pair(std::size_t n, double p_usd_1, double epsilon);

std::optional<ReversalWitness> check_reversal(const SymmetricEnsemble &e1,
                                              const SymmetricEnsemble &e2);

/// P_HYP(E2) / P_HYP(E1) over a P_USD(E1) x epsilon lattice, evaluated from the
/// bound formulas. Cells with epsilon > P_USD(E1) are masked out.
struct RatioGrid {
    std::size_t n = 0;
    std::vector<double> p_usd_axis;
    std::vector<double> epsilon_axis;
    std::vector<double> ratios; ///< row-major [p_usd][epsilon]; NaN if masked
    std::vector<bool> valid;

    [[nodiscard]] std::size_t index(std::size_t i, std::size_t k) const {
        return i * epsilon_axis.size() + k;
    }
    [[nodiscard]] std::optional<double> ratio(std::size_t i, std::size_t k) const;
    /// Cell nearest to (p_usd, epsilon), if that cell is valid.
    [[nodiscard]] std::optional<double> ratio_at(double p_usd,
                                                 double epsilon) const;

    /// Header `p_usd_1,epsilon,ratio`, one row per valid cell, 12 significant
    /// digits.
    void write_csv(std::ostream &out) const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// p_usd axis i / p_usd_steps for i = 1..p_usd_steps; epsilon axis
/// k / epsilon_steps for k = 0..epsilon_steps-1. Throws OutOfRange for n < 3 or
/// fewer than 2 steps.
RatioGrid figure1_grid(std::size_t n, std::size_t p_usd_steps,
                       std::size_t epsilon_steps);

struct GridSummary {
    std::size_t valid_cells = 0;
    std::size_t cells_above_one = 0;
    std::size_t cells_below_one = 0;
    double max_ratio = 0.0;
    double max_p_usd = 0.0;
    double max_epsilon = 0.0;

    [[nodiscard]] double fraction_above_one() const {
        return valid_cells == 0 ? 0.0
                                : static_cast<double>(cells_above_one) /
                                      static_cast<double>(valid_cells);
    }
};

GridSummary summarize(const RatioGrid &grid);

/// Equal-prior two-state P_HYP as a function of P_USD:
/// (1 + sqrt(1 - (1 - p_usd)^2)) / 2.
double two_state_relation(double p_usd);

/// True iff two_state_relation is strictly increasing on a uniform
/// `grid_points` grid over [0, 1].
bool verify_no_two_state_reversal(std::size_t grid_points);

} // namespace qdisc
