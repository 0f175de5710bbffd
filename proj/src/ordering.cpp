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

#include "qdisc/ordering.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "qdisc/error.hpp"
#include "qdisc/extremal.hpp"
#include "qdisc/measures.hpp"

namespace qdisc {

namespace {

constexpr double kMaskSlack = 1e-12;

std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::size_t nearest(const std::vector<double> &axis, double v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < axis.size(); ++i) {
        if (std::abs(axis[i] - v) < std::abs(axis[best] - v)) {
            best = i;
        }
    }
    return best;
}

} // namespace

std::pair<SymmetricEnsemble, SymmetricEnsemble>
build_candidate_pair(std::size_t n, double p_usd_1, double epsilon) {
    if (n < 3) {
        throw Error(ErrorCode::OutOfRange, "candidate pairs need n >= 3");
    }
    if (!(epsilon > 0.0 && epsilon <= p_usd_1 && p_usd_1 <= 1.0)) {
        throw Error(ErrorCode::OutOfRange,
                    "need 0 < epsilon <= p_usd_1 <= 1 (epsilon = " +
                        std::to_string(epsilon) +
                        ", p_usd_1 = " + std::to_string(p_usd_1) + ")");
    }
    auto e1 = extremal_coefficients(ExtremalConfig(n, n - 1, p_usd_1));
    auto e2 = extremal_coefficients(ExtremalConfig(n, 1, p_usd_1 - epsilon));
    return {std::move(e1), std::move(e2)};
}

std::optional<ReversalWitness> check_reversal(const SymmetricEnsemble &e1,
                                              const SymmetricEnsemble &e2) {
    if (e1.n() != e2.n()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "reversal check across n = " + std::to_string(e1.n()) +
                        " and n = " + std::to_string(e2.n()));
    }
    const double usd1 = p_usd_symmetric(e1);
    const double usd2 = p_usd_symmetric(e2);
    const double hyp1 = p_hyp_symmetric(e1);
    const double hyp2 = p_hyp_symmetric(e2);
    if (usd2 < usd1 - kReversalMargin && hyp2 > hyp1 + kReversalMargin) {
        return ReversalWitness{e1, e2, usd1, usd2, hyp1, hyp2, usd1 - usd2};
    }
    return std::nullopt;
}

std::optional<double> RatioGrid::ratio(std::size_t i, std::size_t k) const {
    const std::size_t idx = index(i, k);
    if (!valid[idx]) {
        return std::nullopt;
    }
    return ratios[idx];
}

std::optional<double> RatioGrid::ratio_at(double p_usd, double epsilon) const {
    return ratio(nearest(p_usd_axis, p_usd), nearest(epsilon_axis, epsilon));
}

void RatioGrid::write_csv(std::ostream &out) const {
    out << "p_usd_1,epsilon,ratio\n";
    for (std::size_t i = 0; i < p_usd_axis.size(); ++i) {
        for (std::size_t k = 0; k < epsilon_axis.size(); ++k) {
            if (!valid[index(i, k)]) {
                continue;
            }
            out << format12(p_usd_axis[i]) << ',' << format12(epsilon_axis[k])
                << ',' << format12(ratios[index(i, k)]) << '\n';
        }
    }
}

nlohmann::json RatioGrid::to_json() const {
    auto round12 = [](double v) { return std::stod(format12(v)); };
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < p_usd_axis.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < epsilon_axis.size(); ++k) {
            if (valid[index(i, k)]) {
                row.push_back(round12(ratios[index(i, k)]));
            } else {
                row.push_back(nullptr);
            }
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json p_axis = nlohmann::json::array();
    for (double v : p_usd_axis) {
        p_axis.push_back(round12(v));
    }
    nlohmann::json e_axis = nlohmann::json::array();
    for (double v : epsilon_axis) {
        e_axis.push_back(round12(v));
    }
    return {{"n", n},
            {"p_usd_axis", std::move(p_axis)},
            {"epsilon_axis", std::move(e_axis)},
            {"ratios", std::move(rows)}};
}

RatioGrid figure1_grid(std::size_t n, std::size_t p_usd_steps,
                       std::size_t epsilon_steps) {
    if (n < 3) {
        throw Error(ErrorCode::OutOfRange, "ratio grid needs n >= 3");
    }
    if (p_usd_steps < 2 || epsilon_steps < 2) {
        throw Error(ErrorCode::OutOfRange, "ratio grid needs at least 2 steps");
    }
    RatioGrid grid;
    grid.n = n;
    for (std::size_t i = 1; i <= p_usd_steps; ++i) {
        grid.p_usd_axis.push_back(static_cast<double>(i) /
                                  static_cast<double>(p_usd_steps));
    }
    for (std::size_t k = 0; k < epsilon_steps; ++k) {
        grid.epsilon_axis.push_back(static_cast<double>(k) /
                                    static_cast<double>(epsilon_steps));
    }
    const std::size_t cells = p_usd_steps * epsilon_steps;
    grid.ratios.assign(cells, std::numeric_limits<double>::quiet_NaN());
    grid.valid.assign(cells, false);
    for (std::size_t i = 0; i < grid.p_usd_axis.size(); ++i) {
        const double p1 = grid.p_usd_axis[i];
        const double lower = p_hyp_lower_bound(n, p1);
        for (std::size_t k = 0; k < grid.epsilon_axis.size(); ++k) {
            const double eps = grid.epsilon_axis[k];
            if (eps > p1 + kMaskSlack) {
                continue;
            }
            const double p2 = std::max(p1 - eps, 0.0);
            grid.ratios[grid.index(i, k)] = p_hyp_upper_bound(n, p2) / lower;
            grid.valid[grid.index(i, k)] = true;
        }
    }
    return grid;
}

GridSummary summarize(const RatioGrid &grid) {
    GridSummary s;
    for (std::size_t i = 0; i < grid.p_usd_axis.size(); ++i) {
        for (std::size_t k = 0; k < grid.epsilon_axis.size(); ++k) {
            const auto r = grid.ratio(i, k);
            if (!r) {
                continue;
            }
            ++s.valid_cells;
            if (*r > 1.0) {
                ++s.cells_above_one;
            } else if (*r < 1.0) {
                ++s.cells_below_one;
            }
            if (s.valid_cells == 1 || *r > s.max_ratio) {
                s.max_ratio = *r;
                s.max_p_usd = grid.p_usd_axis[i];
                s.max_epsilon = grid.epsilon_axis[k];
            }
        }
    }
    return s;
}

double two_state_relation(double p_usd) {
    if (!(p_usd >= 0.0 && p_usd <= 1.0)) {
        throw Error(ErrorCode::OutOfRange,
                    "p_usd = " + std::to_string(p_usd) + " outside [0, 1]");
    }
    // Equal priors: P_USD = 1 - overlap, substituted into the Helstrom bound.
    return helstrom_two_state(1.0 - p_usd, 0.0);
}

bool verify_no_two_state_reversal(std::size_t grid_points) {
    if (grid_points < 2) {
        throw Error(ErrorCode::OutOfRange, "need at least 2 grid points");
    }
    double previous = two_state_relation(0.0);
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double p =
            static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double current = two_state_relation(p);
        if (!(current > previous)) {
            return false;
        }
        previous = current;
    }
    return true;
}

} // namespace qdisc
