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
 * Extremal minimum-error success probabilities over equiprobable symmetric
 * ensembles at a fixed unambiguous-discrimination probability.
 *
 * Fixing P_USD fixes the smallest coefficient c_0 = sqrt(P_USD / n). The
 * stationary points of (sum_r c_r)^2 / n under sum_r c_r^2 = 1 split the
 * coefficients into n0 copies of c_0 and n - n0 copies of
 * sqrt((1 - n0 c_0^2) / (n - n0)), which gives
 *
 *   P_HYP(n0) = (n0 sqrt(P_USD) + sqrt((n - n0)(n - n0 P_USD)))^2 / n^2.
 *
 * P_HYP(n0) is nonincreasing in n0, so n0 = 1 is the tight upper bound and
 * n0 = n - 1 the tight lower bound.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "qdisc/ensembles.hpp"

namespace qdisc {

class ExtremalConfig {
  public:
    /// Throws InfeasibleConfig unless n >= 2, 1 <= n0 <= n - 1 and
    /// 0 < p_usd <= 1.
    ExtremalConfig(std::size_t n, std::size_t n0, double p_usd);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t n0() const noexcept { return n0_; }
    [[nodiscard]] double p_usd() const noexcept { return p_usd_; }

  private:
    std::size_t n_;
    std::size_t n0_;
    double p_usd_;
};

/// Minimal coefficients sit at indices 0..n0-1.
SymmetricEnsemble extremal_coefficients(const ExtremalConfig &cfg);

double local_extremum_p_hyp(const ExtremalConfig &cfg);

/// The local-extremum formula over n0 = 1..n-1 (index 0 holds n0 = 1). Accepts
/// p_usd = 0, where the coefficient family degenerates but the formula does
/// not.
std::vector<double> extremum_profile(std::size_t n, double p_usd);

double p_hyp_upper_bound(std::size_t n, double p_usd);
double p_hyp_lower_bound(std::size_t n, double p_usd);

/// True iff the profile is nonincreasing in integer n0 (slack 1e-12) at every
/// grid value.
bool verify_n0_monotonicity(std::size_t n, std::span<const double> p_usd_grid);

} // namespace qdisc
