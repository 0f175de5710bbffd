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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qdisc/error.hpp"
#include "qdisc/extremal.hpp"
#include "qdisc/measures.hpp"
#include "qdisc/oracles.hpp"
#include "qdisc/verification.hpp"

using namespace qdisc;

namespace {

std::vector<PureState> basis_states(std::size_t n) {
    std::vector<PureState> out;
    for (std::size_t i = 0; i < n; ++i) {
        ComplexVector v(n, 0.0);
        v[i] = 1.0;
        out.emplace_back(std::move(v));
    }
    return out;
}

Povm projective(std::size_t n) {
    std::vector<ComplexMatrix> el;
    for (const auto &s : basis_states(n)) {
        el.push_back(ComplexMatrix::outer(s.amplitudes(), s.amplitudes()));
    }
    return Povm(std::move(el));
}

SymmetricEnsemble worked_e1() {
    return extremal_coefficients(ExtremalConfig(3, 2, 0.5));
}

} // namespace

TEST_CASE("Povm validation") {
    CHECK_NOTHROW(projective(3));
    CHECK_THROWS_AS(Povm({ComplexMatrix::identity(2) * 0.5}), Error);
    const std::vector<double> neg{1.5, -0.5};
    CHECK_THROWS_AS(Povm({ComplexMatrix::diagonal(neg),
                          ComplexMatrix::identity(2) - ComplexMatrix::diagonal(neg)}),
                    Error);
    CHECK_THROWS_AS(Povm({ComplexMatrix::identity(2), ComplexMatrix(3, 3)}), Error);
    CHECK(Povm::uniform(4, 3).completeness_defect() <= 1e-15);
}

TEST_CASE("helstrom_two_state") {
    CHECK(helstrom_two_state(0.0, 0.0) == 1.0);
    CHECK(helstrom_two_state(1.0, 0.0) == 0.5);
    CHECK(helstrom_two_state(0.6, 0.0) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK_THROWS_AS(helstrom_two_state(1.2, 0.0), Error);
    CHECK_THROWS_AS(helstrom_two_state(0.5, -0.1), Error);

    // Cross-check: the square-root measurement on an explicit equal-prior pair.
    const auto e = two_state_ensemble(0.6, 0.0);
    const double srm = hyp_success_probability(e, square_root_measurement(e));
    CHECK(std::abs(srm - 0.9) <= 1e-10);
}

TEST_CASE("jaeger_shimony") {
    for (double s : {0.0, 0.3, 0.77, 1.0}) {
        CHECK(jaeger_shimony(s, 0.0) == doctest::Approx(1.0 - s).epsilon(1e-15));
    }
    for (double d : {0.0, 0.4, 0.9}) {
        CHECK(jaeger_shimony(0.0, d) == 1.0);
    }
    CHECK_THROWS_AS(jaeger_shimony(0.5, 1.0), Error);
    CHECK_THROWS_AS(jaeger_shimony(-0.1, 0.0), Error);
}

TEST_CASE("property: Jaeger-Shimony branches meet at the boundary") {
    for (int i = 0; i <= 9; ++i) {
        const double d = 0.1 * i;
        const double s = std::sqrt((1.0 - d) / (1.0 + d));
        const double first = 1.0 - std::sqrt(1.0 - d * d) * s;
        const double second = 0.5 * (1.0 + d) * (1.0 - s * s);
        CHECK(std::abs(first - second) <= 1e-12);
        CHECK(std::abs(jaeger_shimony(s, d) - d) <= 1e-12);
        // Just inside the second branch stays continuous.
        CHECK(std::abs(jaeger_shimony(std::min(1.0, s + 1e-13), d) - d) <= 1e-12);
    }
}

TEST_CASE("symmetric closed forms") {
    const std::vector<double> eq{1.0, 1.0, 1.0};
    const auto ortho = make_symmetric(3, eq);
    CHECK(p_usd_symmetric(ortho) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p_hyp_symmetric(ortho) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(std::abs(p_usd_symmetric(worked_e1()) - 0.5) <= 1e-12);
    CHECK(std::abs(p_hyp_symmetric(worked_e1()) - 8.0 / 9.0) <= 1e-12);

    const auto e2 = extremal_coefficients(ExtremalConfig(3, 1, 0.4));
    CHECK(std::abs(p_hyp_symmetric(e2) - 0.9427156689301326) <= 1e-12);
    CHECK(std::abs(p_hyp_symmetric(e2) - 0.943) <= 1e-3);
}

TEST_CASE("square_root_measurement on orthonormal states is projective") {
    const auto e = Ensemble::equiprobable(basis_states(3));
    const auto srm = square_root_measurement(e);
    REQUIRE(srm.size() == 3);
    const auto proj = projective(3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(max_abs_diff(srm.elements()[j], proj.elements()[j]) <= 1e-12);
    }
    CHECK(hyp_success_probability(e, srm) == doctest::Approx(1.0));
    CHECK(optimality_certificate(e, srm));
}

TEST_CASE("uniform guess scores 1/N and fails the certificate") {
    const auto e = Ensemble::equiprobable(basis_states(3));
    const auto guess = Povm::uniform(3, 3);
    CHECK(hyp_success_probability(e, guess) == doctest::Approx(1.0 / 3.0));
    CHECK_FALSE(optimality_certificate(e, guess));
}

TEST_CASE("hyp_success_probability dimension checks") {
    const auto e = Ensemble::equiprobable(basis_states(3));
    CHECK_THROWS_AS(hyp_success_probability(e, Povm::uniform(3, 2)), Error);
    CHECK_THROWS_AS(hyp_success_probability(e, Povm::uniform(2, 3)), Error);
    CHECK_THROWS_AS(optimality_certificate(e, Povm::uniform(2, 3)), Error);
}

TEST_CASE("square_root_measurement completes non-spanning states") {
    // Two states inside a three-dimensional space.
    std::vector<PureState> states;
    states.push_back(PureState::normalized({1.0, 0.0, 0.0}));
    states.push_back(PureState::normalized({0.6, 0.8, 0.0}));
    const auto e = Ensemble::equiprobable(std::move(states));
    const auto srm = square_root_measurement(e);
    CHECK(srm.size() == 3);
    CHECK(srm.completeness_defect() <= 1e-9);
    CHECK(std::abs(hyp_success_probability(e, srm) - helstrom_two_state(0.6, 0.0)) <=
          1e-10);
    CHECK(optimality_certificate(e, srm));
}

TEST_CASE("square_root_measurement on linearly dependent symmetric states") {
    // Symmetric n = 3 family with c_2 = 0: rank-2 states padded into dim 3.
    const double c0 = 0.8;
    const double c1 = 0.6;
    std::vector<PureState> states;
    for (std::size_t j = 0; j < 3; ++j) {
        const double phase = 2.0 * 3.14159265358979323846 * static_cast<double>(j) / 3.0;
        states.emplace_back(ComplexVector{c0, std::polar(c1, phase), 0.0});
    }
    const auto e = Ensemble::equiprobable(std::move(states));
    CHECK_FALSE(is_linearly_independent(e));
    const auto srm = square_root_measurement(e);
    CHECK(srm.completeness_defect() <= 1e-9);
    CHECK(std::abs(hyp_success_probability(e, srm) - (c0 + c1) * (c0 + c1) / 3.0) <=
          1e-10);
    CHECK(optimality_certificate(e, srm));
}

TEST_CASE("square_root_measurement rejects a barely resolved frame") {
    // Frame eigenvalue ~ 5e-10: above the null cut, below the independence
    // threshold.
    const double t = std::sqrt(2.5e-10);
    std::vector<PureState> states;
    states.push_back(PureState::normalized({1.0, t}));
    states.push_back(PureState::normalized({1.0, -t}));
    const auto e = Ensemble::equiprobable(std::move(states));
    try {
        square_root_measurement(e);
        FAIL("expected SingularFrame");
    } catch (const Error &err) {
        CHECK(err.code() == ErrorCode::SingularFrame);
    }
}

TEST_CASE("property: SRM matches the closed form and certifies, random symmetric") {
    std::mt19937_64 rng(2024);
    for (std::size_t trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto sym = random_symmetric(n, rng);
        const auto e = realize(sym);
        const auto srm = square_root_measurement(e);
        CHECK(srm.completeness_defect() <= 1e-9);
        CHECK(std::abs(p_hyp_symmetric(sym) - hyp_success_probability(e, srm)) <=
              1e-10);
        CHECK(optimality_certificate(e, srm));
    }
}

TEST_CASE("property: measures are invariant under coefficient permutation") {
    std::mt19937_64 rng(77);
    for (std::size_t trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + trial % 4;
        const auto sym = random_symmetric(n, rng);
        std::vector<double> c(sym.coeffs().begin(), sym.coeffs().end());
        std::shuffle(c.begin(), c.end(), rng);
        const auto shuffled = make_symmetric(n, c);
        CHECK(std::abs(p_usd_symmetric(sym) - p_usd_symmetric(shuffled)) <= 1e-14);
        CHECK(std::abs(p_hyp_symmetric(sym) - p_hyp_symmetric(shuffled)) <= 1e-14);
        const auto e = realize(shuffled);
        CHECK(std::abs(hyp_success_probability(e, square_root_measurement(e)) -
                       p_hyp_symmetric(sym)) <= 1e-10);
    }
}

TEST_CASE("property: two-state bounds are monotone") {
    double prev_h = 2.0;
    double prev_js = 2.0;
    for (int i = 0; i < 1000; ++i) {
        const double s = i / 999.0;
        const double h = helstrom_two_state(s, 0.0);
        const double js = jaeger_shimony(s, 0.0);
        CHECK(h <= prev_h);
        CHECK(js <= prev_js);
        prev_h = h;
        prev_js = js;
    }
    for (double s : {0.1, 0.5, 0.9, 0.99}) {
        double ph = 0.0;
        double pj = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double d = k / 100.0; // stays below 1 for Jaeger-Shimony
            const double h = helstrom_two_state(s, d);
            const double js = jaeger_shimony(s, d);
            CHECK(h >= ph - 1e-12);
            CHECK(js >= pj - 1e-12);
            ph = h;
            pj = js;
        }
    }
}

TEST_CASE("ensemble_entropy_two_state") {
    CHECK(ensemble_entropy_two_state(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(ensemble_entropy_two_state(0.3, 1.0) == 0.0);
    CHECK(ensemble_entropy_two_state(1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(ensemble_entropy_two_state(0.5, 1.5), Error);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == 1.0);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double s = unit(rng);
        CHECK(std::abs(ensemble_entropy_two_state(s, 0.0) -
                       entropy_oracle(two_state_ensemble(s, 0.0))) <= 1e-12);
    }
}

TEST_CASE("two_state_params") {
    const auto e = two_state_ensemble(0.35, 0.2);
    const auto p = two_state_params(e);
    CHECK(p.overlap == doctest::Approx(0.35).epsilon(1e-14));
    CHECK(p.delta == doctest::Approx(0.2).epsilon(1e-14));
    CHECK_THROWS_AS(two_state_params(Ensemble::equiprobable(basis_states(3))), Error);
}
