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

#include "qdisc/verification.hpp"

#include <algorithm>
#include <cmath>

#include "qdisc/extremal.hpp"
#include "qdisc/measures.hpp"
#include "qdisc/oracles.hpp"
#include "qdisc/ordering.hpp"

namespace qdisc {

SymmetricEnsemble random_symmetric(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> coeff(0.05, 1.0);
    std::vector<double> c(n);
    for (auto &v : c) {
        v = coeff(rng);
    }
    return make_symmetric(n, c);
}

Ensemble two_state_ensemble(double overlap, double delta) {
    std::vector<PureState> states;
    states.emplace_back(ComplexVector{1.0, 0.0});
    states.push_back(PureState::normalized(
        {overlap, std::sqrt(std::max(0.0, 1.0 - overlap * overlap))}));
    return Ensemble(std::move(states),
                    {0.5 * (1.0 + delta), 0.5 * (1.0 - delta)});
}

namespace {

SuiteResult srm_suite(std::mt19937_64 &rng) {
    SuiteResult r{"srm_closed_form", true, 0.0, 1e-10, 100};
    for (std::size_t i = 0; i < r.cases; ++i) {
        const auto sym = random_symmetric(2 + i % 5, rng);
        const auto ens = realize(sym);
        const auto srm = square_root_measurement(ens);
        const double dev =
            std::abs(p_hyp_symmetric(sym) - hyp_success_probability(ens, srm));
        r.worst_deviation = std::max(r.worst_deviation, dev);
        if (srm.completeness_defect() > kCompletenessEps ||
            !optimality_certificate(ens, srm)) {
            r.passed = false;
        }
    }
    r.passed = r.passed && r.worst_deviation <= r.tolerance;
    return r;
}

SuiteResult extremal_suite() {
    SuiteResult r{"extremal_consistency", true, 0.0, 1e-12, 0};
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::size_t n0 = 1; n0 < n; ++n0) {
            for (int step = 1; step <= 20; ++step) {
                const ExtremalConfig cfg(n, n0, 0.05 * step);
                const auto sym = extremal_coefficients(cfg);
                r.worst_deviation = std::max(
                    {r.worst_deviation,
                     std::abs(local_extremum_p_hyp(cfg) - p_hyp_symmetric(sym)),
                     std::abs(p_usd_symmetric(sym) - cfg.p_usd())});
                ++r.cases;
            }
        }
    }
    r.passed = r.worst_deviation <= r.tolerance;
    return r;
}

SuiteResult sandwich_suite(std::mt19937_64 &rng) {
    SuiteResult r{"sandwich", true, 0.0, 1e-10, 100};
    for (std::size_t i = 0; i < r.cases; ++i) {
        const std::size_t n = 3 + i % 4;
        const auto sym = random_symmetric(n, rng);
        const double usd = p_usd_symmetric(sym);
        const double hyp = p_hyp_symmetric(sym);
        const double below = p_hyp_lower_bound(n, usd) - hyp;
        const double above = hyp - p_hyp_upper_bound(n, usd);
        r.worst_deviation = std::max({r.worst_deviation, below, above});
    }
    r.passed = r.worst_deviation <= r.tolerance;
    return r;
}

SuiteResult usd_suite(std::mt19937_64 &rng) {
    SuiteResult r{"usd_oracle", true, 0.0, 1e-6, 20};
    const Tolerance tol;
    for (std::size_t i = 0; i < r.cases; ++i) {
        const auto sym = random_symmetric(3, rng);
        const auto sol = usd_oracle(realize(sym), 25);
        r.worst_deviation = std::max(r.worst_deviation,
                                     std::abs(sol.average - p_usd_symmetric(sym)));
        if (sol.inconclusive_min_eig < tol.psd_floor) {
            r.passed = false;
        }
    }
    r.passed = r.passed && r.worst_deviation <= r.tolerance;
    return r;
}

SuiteResult entropy_suite(std::mt19937_64 &rng) {
    SuiteResult r{"entropy", true, 0.0, 1e-12, 100};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < r.cases; ++i) {
        const double overlap = unit(rng);
        const double delta = unit(rng);
        const double dev =
            std::abs(ensemble_entropy_two_state(overlap, delta) -
                     entropy_oracle(two_state_ensemble(overlap, delta)));
        r.worst_deviation = std::max(r.worst_deviation, dev);
    }
    r.passed = r.worst_deviation <= r.tolerance;
    return r;
}

SuiteResult random_search_suite(std::mt19937_64 &rng, std::uint64_t seed) {
    SuiteResult r{"random_search_bound", true, 0.0, 1e-9, 5};
    for (std::size_t i = 0; i < r.cases; ++i) {
        const auto sym = random_symmetric(3, rng);
        const double found = hyp_random_search(realize(sym), 200, seed + 1000 * i);
        r.worst_deviation =
            std::max(r.worst_deviation, found - p_hyp_symmetric(sym));
    }
    r.passed = r.worst_deviation <= r.tolerance;
    return r;
}

SuiteResult monotonicity_suite() {
    SuiteResult r{"n0_monotonicity", true, 0.0, 1e-12, 0};
    std::vector<double> grid;
    for (int k = 1; k <= 19; ++k) {
        grid.push_back(0.05 * k);
    }
    for (std::size_t n = 3; n <= 10; ++n) {
        r.passed = r.passed && verify_n0_monotonicity(n, grid);
        ++r.cases;
    }
    return r;
}

SuiteResult two_state_suite() {
    SuiteResult r{"two_state_no_reversal", true, 0.0, 0.0, 1000};
    r.passed = verify_no_two_state_reversal(r.cases);
    return r;
}

} // namespace

std::vector<SuiteResult> run_verification_suites(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SuiteResult> out;
    out.push_back(srm_suite(rng));
    out.push_back(extremal_suite());
    out.push_back(sandwich_suite(rng));
    out.push_back(usd_suite(rng));
    out.push_back(entropy_suite(rng));
    out.push_back(random_search_suite(rng, seed));
    out.push_back(monotonicity_suite());
    out.push_back(two_state_suite());
    return out;
}

} // namespace qdisc
