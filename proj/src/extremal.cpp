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

#include "qdisc/extremal.hpp"

#include <cmath>
#include <string>

#include "qdisc/error.hpp"

namespace qdisc {

namespace {

constexpr double kMonotoneSlack = 1e-12;

double extremum_formula(std::size_t n, std::size_t n0, double p_usd) {
    const auto nn = static_cast<double>(n);
    const auto k = static_cast<double>(n0);
    // Squared out so the endpoints p_usd = 0, 1 reduce to integer ratios and
    // come out exact in floating point.
    const double rest = (nn - k) * (nn - k * p_usd);
    const double cross = 2.0 * k * std::sqrt(p_usd * rest);
    return (k * k * p_usd + rest + cross) / (nn * nn);
}

void require_bound_args(std::size_t n, double p_usd) {
    if (n < 2) {
        throw Error(ErrorCode::OutOfRange, "bounds need n >= 2");
    }
    if (!(p_usd >= 0.0 && p_usd <= 1.0)) {
        throw Error(ErrorCode::OutOfRange,
                    "p_usd = " + std::to_string(p_usd) + " outside [0, 1]");
    }
}

} // namespace

ExtremalConfig::ExtremalConfig(std::size_t n, std::size_t n0, double p_usd)
    : n_(n), n0_(n0), p_usd_(p_usd) {
    if (n < 2 || n0 < 1 || n0 > n - 1) {
        throw Error(ErrorCode::InfeasibleConfig,
                    "need n >= 2 and 1 <= n0 <= n - 1 (n = " +
                        std::to_string(n) + ", n0 = " + std::to_string(n0) +
                        ")");
    }
    if (!(p_usd > 0.0 && p_usd <= 1.0)) {
        throw Error(ErrorCode::InfeasibleConfig,
                    "p_usd = " + std::to_string(p_usd) + " outside (0, 1]");
    }
}

SymmetricEnsemble extremal_coefficients(const ExtremalConfig &cfg) {
    const auto n = static_cast<double>(cfg.n());
    const auto n0 = static_cast<double>(cfg.n0());
    const double c0_sq = cfg.p_usd() / n;
    const double rest_sq = (1.0 - n0 * c0_sq) / (n - n0);
    // rest >= c0 is equivalent to p_usd <= 1; allow round-off at p_usd = 1.
    if (rest_sq < c0_sq * (1.0 - 1e-12)) {
        throw Error(ErrorCode::InfeasibleConfig,
                    "minimal coefficient would exceed the remaining ones");
    }
    std::vector<double> coeffs(cfg.n(), std::sqrt(rest_sq));
    for (std::size_t r = 0; r < cfg.n0(); ++r) {
        coeffs[r] = std::sqrt(c0_sq);
    }
    return make_symmetric(cfg.n(), coeffs);
}

double local_extremum_p_hyp(const ExtremalConfig &cfg) {
    return extremum_formula(cfg.n(), cfg.n0(), cfg.p_usd());
}

std::vector<double> extremum_profile(std::size_t n, double p_usd) {
    require_bound_args(n, p_usd);
    std::vector<double> profile;
    profile.reserve(n - 1);
    for (std::size_t n0 = 1; n0 <= n - 1; ++n0) {
        profile.push_back(extremum_formula(n, n0, p_usd));
    }
    return profile;
}

double p_hyp_upper_bound(std::size_t n, double p_usd) {
    require_bound_args(n, p_usd);
    return extremum_formula(n, 1, p_usd);
}

double p_hyp_lower_bound(std::size_t n, double p_usd) {
    require_bound_args(n, p_usd);
    return extremum_formula(n, n - 1, p_usd);
}

bool verify_n0_monotonicity(std::size_t n, std::span<const double> p_usd_grid) {
    for (double p : p_usd_grid) {
        const auto profile = extremum_profile(n, p);
        for (std::size_t i = 1; i < profile.size(); ++i) {
            if (profile[i] > profile[i - 1] + kMonotoneSlack) {
                return false;
            }
        }
    }
    return true;
}

} // namespace qdisc
